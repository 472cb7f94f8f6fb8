#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "retractlab/endo.hpp"
#include "retractlab/parallel.hpp"
#include "retractlab/retracts.hpp"

namespace retractlab {

// ---- normalization -------------------------------------------------------

/// compose(to_endo(sigma), compose(phi, to_endo(sigma_prime))) == (x + y*h1, y*h2).
struct NormalizedEndo {
  TameAuto sigma;
  TameAuto sigma_prime;
  Poly2 h1;
  Poly2 h2;

  Endo endo() const { return Endo{Poly2::x() + Poly2::y() * h1, Poly2::y() * h2}; }
};

/// f_cert must certify phi.f through sigma (NormalForm or Conjugated).
/// Throws std::invalid_argument for a mismatched or Direct certificate and
/// std::domain_error("image lies in K[x] after normalization") when h2 == 0.
NormalizedEndo normalize(const Endo& phi, const RetractCertificate& f_cert);

// ---- witness coordinates -------------------------------------------------

struct WitnessParams {
  long n = 4;
  long m = 0;
};

/// max{deg h1 + 2, N, 1 + (N+1) deg h1} + 1, with deg 0 read as 0.
long witness_M(const Poly2& h1, long n);

/// y + (x + y^M)^2. Throws std::invalid_argument for M < 1.
Poly2 witness_coordinate(long m);

/// [ElemX(y^M), ElemY(x^2)]; recomposes to (x + y^M, witness_coordinate(M)).
TameAuto witness_factorization(long m);

/// y*h2 + (x + y*h1 + y^M h2^M)^2, cross-checked against substitution of the
/// normalized endomorphism into the witness. Throws std::logic_error on mismatch.
Poly2 image_of_witness(const NormalizedEndo& n, long m);

// ---- degree analysis of the witness image --------------------------------

enum class DegreeCase { TConstant, SConstant, Both };
std::string to_string(DegreeCase c);

struct InequalityCheck {
  std::string name;
  Degree lhs;
  Degree rhs;
  std::string relation;  // "<", "<=", "==", ">=", ">", "!="
  bool holds = false;
};

struct CaseReport {
  DegreeCase branch = DegreeCase::Both;
  std::string sub_branch;
  /// The conditions the case argument starts from: s linear when t is
  /// constant, t linear when s is constant, deg s <= N deg t otherwise.
  bool case_hypotheses_hold = false;
  std::vector<InequalityCheck> checks;
  Degree image_degree;
  bool image_equals_z = false;

  bool all_checks_hold() const;
};

/// Evaluates pi = (s, t) on the witness image and checks every degree
/// relation of the matching case. Throws std::invalid_argument if s and t
/// are both constant.
CaseReport lemma200_degree_analysis(const NormalizedEndo& n, const WitnessParams& params, const UniPoly& s,
                                    const UniPoly& t);

// ---- leading monomials ---------------------------------------------------

/// v(f') = y^a x^b, v(g') = y^c x^d.
struct LeadingPair {
  long a = 0, b = 0, c = 0, d = 0;
  static LeadingPair of(const Endo& psi);
};

struct Dependence {
  long k = 0;
  /// false: (a,b) = k (c,d). true: (c,d) = k (a,b).
  bool swapped = false;
};

std::optional<Dependence> leading_dependence(const LeadingPair& lp);

struct RatioValue {
  Rat value;      // (a + b m) / (c + d m)
  Rat k;          // b / d
  Rat remainder;  // (a - c k) / (c + d m)
};

/// Throws std::invalid_argument unless d != 0 and d | b, and
/// std::domain_error when c + d m == 0. value == k + remainder always.
RatioValue ratio_value(long a, long b, long c, long d, const Rat& m);

/// d1 | d2 or d2 | d1. Throws for non-positive input.
bool am_divisibility(long d1, long d2);

// ---- reduction engine ----------------------------------------------------

struct Reduced {
  ElementaryMove move;  // right factor: psi' = compose(psi, to_endo(move))
  Endo next;
  bool first;  // which component changed
};
struct LinearComponent {
  bool first;  // f == a'y + b' (else g)
};
struct StuckReport {
  std::string reason;
  std::optional<Monomial> lead_f;
  std::optional<Monomial> lead_g;
};

using ReductionStep = std::variant<Reduced, LinearComponent, StuckReport>;

/// One step of the lex leading-monomial reduction. Throws
/// std::invalid_argument for a constant component.
ReductionStep reduction_step(const Endo& psi);

struct ReductionOutcome {
  enum class Kind { Automorphism, Stuck, Budget };
  Kind kind = Kind::Stuck;
  TameAuto trail;  // Automorphism: to_endo(trail) == psi
  long steps = 0;
  StuckReport stuck;
  std::vector<std::string> log;
};
std::string to_string(ReductionOutcome::Kind k);

ReductionOutcome run_reduction(const Endo& psi, long max_steps = 10000);

// ---- transport -----------------------------------------------------------

struct TransportCheck {
  bool u_yes = false;  // z in K[psi.f(s,t), psi.g(s,t)]
  bool w_yes = false;  // same for psi o alpha
  long bound = 0;      // u-side bound actually used
  long w_bound = 0;
  int escalations = 0;
  bool equal() const { return u_yes == w_yes; }
};

/// Both sides generate the same subalgebra; the alpha side is searched with
/// the bound inflated by degree_bound(alpha). On a mismatch the bound is
/// doubled, at most three times.
TransportCheck transport_sequence_check(const Endo& psi, const TameAuto& alpha, const UniPoly& s, const UniPoly& t,
                                        long bound);

// ---- experiments ---------------------------------------------------------

struct TrialRecord {
  long trial = 0;
  std::uint64_t seed = 0;
  std::string verdict;  // "automorphism" or the failure
  long steps = 0;
  bool ok = false;
};

struct NegativeRecord {
  std::string phi_f;
  std::string phi_g;
  std::optional<std::string> coordinate;  // first sampled coordinate whose image fails
  std::optional<std::string> image;
  std::string reason;
  long sampled = 0;
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  long trials = 0;
  unsigned max_deg = 0;
  std::vector<TrialRecord> records;  // sorted by trial
  std::vector<NegativeRecord> negatives;
  long ok_count() const;
};

struct ExperimentOptions {
  std::uint64_t seed = 7;
  long trials = 50;
  unsigned max_deg = 4;
  bool sample_coords = true;
  unsigned max_moves = 4;
  long coeff_bound = 3;
  unsigned deg_bound = 3;
  long max_steps = 10000;
  Execution execution = Execution::Parallel;
};

/// Default non-automorphism library: (x, xy), (x, y^2), (x + y^2, y^2), (x^2, y).
std::vector<Endo> non_automorphism_library();

/// Coordinates sampled for the negative side, in the order they are tried.
std::vector<Poly2> sampled_coordinates(long witness_m);

/// Searches the sampled coordinates for one whose image under phi is not a
/// bounded-search retract generator.
NegativeRecord refute_by_sampling(const Endo& phi, unsigned max_deg, long witness_m, Execution execution);

TrialRecord run_trial(std::uint64_t base_seed, long trial, const ExperimentOptions& opts);

ExperimentReport main_theorem_experiment(const ExperimentOptions& opts);

// ---- divisibility sweep --------------------------------------------------

struct SweepRecord {
  UniPoly s;
  UniPoly t;
  bool yes = false;
  bool consistent = true;  // Yes implies divisibility (or the degenerate linear case)
};

struct SweepOptions {
  std::uint64_t seed = 1;
  long pairs = 1000;
  unsigned max_deg = 5;
  long coeff_bound = 2;
  long bound = 12;
  Execution execution = Execution::Parallel;
};

/// Pair index i draws from a generator seeded with seed + i. Odd indices are
/// uniform; even indices use t = +-z^m, s = a z + b + c t^k, which stays in
/// the coefficient range and always generates K[z].
std::pair<UniPoly, UniPoly> sweep_pair(std::uint64_t seed, long index, const SweepOptions& opts);

std::vector<SweepRecord> am_sweep(const SweepOptions& opts);

}  // namespace retractlab
