#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retractlab/endo.hpp"
#include "retractlab/parallel.hpp"
#include "retractlab/poly2.hpp"
#include "retractlab/unipoly.hpp"

namespace retractlab {

/// Certifies that K[p] is a proper retract: p(s(z), t(z)) = z, so that
/// (s(p), t(p)) is an idempotent endomorphism with image K[p].
class Retraction {
 public:
  /// Throws std::invalid_argument unless p is nonconstant and p(s, t) = z.
  static Retraction make(Poly2 p, UniPoly s, UniPoly t);

  const Poly2& p() const { return p_; }
  const UniPoly& s() const { return s_; }
  const UniPoly& t() const { return t_; }

 private:
  Retraction(Poly2 p, UniPoly s, UniPoly t) : p_(std::move(p)), s_(std::move(s)), t_(std::move(t)) {}
  Poly2 p_;
  UniPoly s_;
  UniPoly t_;
};

struct RetractCertificate {
  enum class Kind { NormalForm, Conjugated, Direct };

  Kind kind = Kind::Direct;
  Poly2 p;
  TameAuto sigma;  // Conjugated: sigma(p) = x + y*h
  Poly2 h;         // NormalForm, Conjugated
  UniPoly s;       // all kinds carry the resulting certificate pair
  UniPoly t;

  static RetractCertificate normal_form(const Poly2& h);
  static RetractCertificate direct(const Poly2& p, const UniPoly& s, const UniPoly& t);

  /// Rebuilds and validates the retraction. Throws if the certificate is inconsistent.
  Retraction retraction() const;
};

/// p(s, t) == z. Throws std::invalid_argument for constant p.
bool verify_retract_generator(const Poly2& p, const UniPoly& s, const UniPoly& t);

struct RetractionEndo {
  Endo pi;          // (s(p), t(p))
  Endo pi_squared;  // pi o pi
  Poly2 pi_of_p;    // pi(p)
};

/// pi = (s(p), t(p)) with pi o pi and pi(p). The square is computed through
/// the factorization pi = (z -> p) o (x -> s, y -> t), which keeps the
/// intermediate degrees at deg(p) * deg(s, t). Throws std::logic_error if
/// pi is not idempotent or does not fix p.
RetractionEndo retraction_endo(const Retraction& r);

/// Options for the bounded generator search.
struct SearchOptions {
  unsigned max_deg = 4;
  /// Values tried for coefficients that the staged solve leaves free, in order.
  std::vector<Rat> candidates{Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)};
  Execution execution = Execution::Parallel;
};

struct GeneratorDecision {
  bool yes = false;
  UniPoly s;
  UniPoly t;
  long ds = 0;  // degree slot where the certificate was found
  long dt = 0;
  unsigned max_deg = 0;
  std::string reason;  // "certificate", "square", or "no certificate up to max_deg"
};

/// c * q^2 == p for some rational c and polynomial q; such p never maps to z.
bool is_constant_times_square(const Poly2& p);

/// Certificate search in the degree slot (ds, dt): deg s <= ds, deg t <= dt,
/// with ds == 0 meaning s is a constant. Returns the first solution in the
/// deterministic search order.
std::optional<std::pair<UniPoly, UniPoly>> search_degree_slot(const Poly2& p, long ds, long dt,
                                                              const std::vector<Rat>& candidates);

/// Slots (ds, dt) in [0, max_deg]^2 ordered by ds + dt, then ds.
std::vector<std::pair<long, long>> degree_slots(unsigned max_deg);

/// Bounded semidecision of "K[p] is a proper retract". A negative answer
/// means no certificate exists in the searched space, not that none exists.
GeneratorDecision is_retract_generator_bounded(const Poly2& p, const SearchOptions& opts = {});

/// p with sigma(p) = x + y*h and its transported certificate
/// (s, t) = (sigma.f(z, 0), sigma.g(z, 0)), verified before return.
RetractCertificate make_retract_generator(const TameAuto& sigma, const Poly2& h);

struct KzDecision {
  bool yes = false;
  long bound = 0;
  /// z = sum c * s^i t^j when yes.
  struct Term {
    long i;
    long j;
    Rat c;
  };
  std::vector<Term> combination;
};

/// Whether z lies in the span of s^i t^j with i*deg s + j*deg t <= bound.
KzDecision generates_Kz(const UniPoly& s, const UniPoly& t, long bound);

}  // namespace retractlab
