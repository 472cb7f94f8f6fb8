#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "retractlab/poly2.hpp"
#include "retractlab/unipoly.hpp"

namespace retractlab {

/// Endomorphism of K[x,y] given by the images of the coordinates:
/// x -> f, y -> g. It acts on a polynomial by substitution.
struct Endo {
  Poly2 f;
  Poly2 g;

  static Endo identity() { return Endo{Poly2::x(), Poly2::y()}; }
  Poly2 apply(const Poly2& p) const { return substitute2(p, f, g); }
  bool is_identity() const { return *this == identity(); }

  friend bool operator==(const Endo&, const Endo&) = default;
};

/// Composition of ring endomorphisms: compose(outer, inner)(p) is
/// outer(inner(p)). So compose(outer, inner).f = outer.apply(inner.f).
Endo compose(const Endo& outer, const Endo& inner);

/// df/dx * dg/dy - df/dy * dg/dx.
Poly2 jacobian(const Endo& phi);

/// (x + u(y), y)
struct ElemX {
  UniPoly u;
  friend bool operator==(const ElemX&, const ElemX&) = default;
};

/// (x, y + u(x))
struct ElemY {
  UniPoly u;
  friend bool operator==(const ElemY&, const ElemY&) = default;
};

/// (m00 x + m01 y + b0, m10 x + m11 y + b1) with det m != 0.
struct Affine {
  std::array<std::array<Rat, 2>, 2> m{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
  std::array<Rat, 2> b{Rat(0), Rat(0)};

  Rat det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  bool is_identity() const;
  /// Throws std::domain_error when det == 0.
  static Affine make(std::array<std::array<Rat, 2>, 2> m, std::array<Rat, 2> b);
  static Affine swap();

  friend bool operator==(const Affine&, const Affine&) = default;
};

using ElementaryMove = std::variant<ElemX, ElemY, Affine>;

Endo to_endo(const ElementaryMove& m);
ElementaryMove inverse(const ElementaryMove& m);
/// Largest degree of the polynomial carried by the move (1 for affine).
long move_degree(const ElementaryMove& m);

/// Product of elementary moves. to_endo composes them in list order:
/// to_endo([m1, m2, ..., mk]) = m1 o m2 o ... o mk.
struct TameAuto {
  std::vector<ElementaryMove> moves;

  friend bool operator==(const TameAuto&, const TameAuto&) = default;
};

Endo to_endo(const TameAuto& t);
TameAuto inverse(const TameAuto& t);
/// Product of the move degrees; bounds the degree of to_endo(t) and of its inverse.
long degree_bound(const TameAuto& t);

/// Degree trace entry of the automorphism decision.
struct ReductionTrace {
  long deg_f;
  long deg_g;
};

struct AutomorphismDecision {
  bool yes = false;
  TameAuto factorization;  // to_endo(factorization) == phi when yes
  std::string reason;      // why not, when !yes
  std::vector<ReductionTrace> trace;
};

/// Decides whether phi is an automorphism of K[x,y] by total-degree
/// reduction against leading homogeneous forms, finishing with an exact
/// 2x2 affine solve.
AutomorphismDecision is_automorphism(const Endo& phi);

/// Deterministic generator state for the experiment drivers.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; platform independent for a fixed seed.
long uniform_int(Rng& rng, long lo, long hi);

struct TameParams {
  unsigned n_moves = 3;
  long coeff_bound = 3;
  unsigned deg_bound = 3;
};

/// Random product of n_moves elementary moves with integer coefficients in
/// [-coeff_bound, coeff_bound] and elementary degrees in [1, deg_bound].
TameAuto random_tame(Rng& rng, const TameParams& params);
TameAuto random_tame(std::uint64_t seed, const TameParams& params);

}  // namespace retractlab
