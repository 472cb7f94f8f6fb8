#include "retractlab/endo.hpp"

#include <stdexcept>

namespace retractlab {

Endo compose(const Endo& outer, const Endo& inner) { return Endo{outer.apply(inner.f), outer.apply(inner.g)}; }

Poly2 jacobian(const Endo& phi) { return phi.f.dx() * phi.g.dy() - phi.f.dy() * phi.g.dx(); }

bool Affine::is_identity() const { return *this == Affine{}; }

Affine Affine::make(std::array<std::array<Rat, 2>, 2> m, std::array<Rat, 2> b) {
  Affine a{m, b};
  if (a.det() == 0) throw std::domain_error("affine move with singular matrix");
  return a;
}

Affine Affine::swap() { return Affine{{{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}}, {Rat(0), Rat(0)}}; }

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Endo to_endo(const ElementaryMove& m) {
  return std::visit(Overloaded{
                        [](const ElemX& e) { return Endo{Poly2::x() + Poly2::in_y(e.u), Poly2::y()}; },
                        [](const ElemY& e) { return Endo{Poly2::x(), Poly2::y() + Poly2::in_x(e.u)}; },
                        [](const Affine& a) {
                          return Endo{a.m[0][0] * Poly2::x() + a.m[0][1] * Poly2::y() + Poly2::constant(a.b[0]),
                                      a.m[1][0] * Poly2::x() + a.m[1][1] * Poly2::y() + Poly2::constant(a.b[1])};
                        },
                    },
                    m);
}

ElementaryMove inverse(const ElementaryMove& m) {
  return std::visit(Overloaded{
                        [](const ElemX& e) -> ElementaryMove { return ElemX{-e.u}; },
                        [](const ElemY& e) -> ElementaryMove { return ElemY{-e.u}; },
                        [](const Affine& a) -> ElementaryMove {
                          const Rat d = a.det();
                          Affine inv;
                          inv.m = {{{a.m[1][1] / d, -a.m[0][1] / d}, {-a.m[1][0] / d, a.m[0][0] / d}}};
                          inv.b = {-(inv.m[0][0] * a.b[0] + inv.m[0][1] * a.b[1]),
                                   -(inv.m[1][0] * a.b[0] + inv.m[1][1] * a.b[1])};
                          return inv;
                        },
                    },
                    m);
}

long move_degree(const ElementaryMove& m) {
  return std::visit(Overloaded{
                        [](const ElemX& e) { return std::max(1L, e.u.deg().value_or(0)); },
                        [](const ElemY& e) { return std::max(1L, e.u.deg().value_or(0)); },
                        [](const Affine&) { return 1L; },
                    },
                    m);
}

Endo to_endo(const TameAuto& t) {
  Endo acc = Endo::identity();
  for (const auto& m : t.moves) acc = compose(acc, to_endo(m));
  return acc;
}

TameAuto inverse(const TameAuto& t) {
  TameAuto out;
  out.moves.reserve(t.moves.size());
  for (auto it = t.moves.rbegin(); it != t.moves.rend(); ++it) out.moves.push_back(inverse(*it));
  return out;
}

long degree_bound(const TameAuto& t) {
  long d = 1;
  for (const auto& m : t.moves) d *= move_degree(m);
  return d;
}

AutomorphismDecision is_automorphism(const Endo& phi) {
  AutomorphismDecision out;
  const Poly2 jac = jacobian(phi);
  if (jac.is_zero()) {
    out.reason = "vanishing jacobian";
    return out;
  }
  if (!jac.is_constant()) {
    out.reason = "nonconstant jacobian";
    return out;
  }

  // cur = phi o right[0] o right[1] o ...
  Endo cur = phi;
  std::vector<ElementaryMove> right;
  for (;;) {
    const long df = cur.f.deg().value_or(-1);
    const long dg = cur.g.deg().value_or(-1);
    out.trace.push_back({df, dg});
    if (df <= 0 || dg <= 0) {
      // Unreachable with a nonzero constant jacobian, kept for totality.
      out.reason = "constant component";
      return out;
    }
    if (df <= 1 && dg <= 1) {
      Affine a;
      a.m = {{{cur.f.coeff({0, 1}), cur.f.coeff({1, 0})}, {cur.g.coeff({0, 1}), cur.g.coeff({1, 0})}}};
      a.b = {cur.f.constant_term(), cur.g.constant_term()};
      if (a.det() == 0) {
        out.reason = "singular linear part";
        return out;
      }
      if (!a.is_identity()) out.factorization.moves.emplace_back(a);
      for (auto it = right.rbegin(); it != right.rend(); ++it) out.factorization.moves.push_back(inverse(*it));
      out.yes = true;
      return out;
    }

    const bool reduce_f = df >= dg;
    const Poly2& big = reduce_f ? cur.f : cur.g;
    const Poly2& small = reduce_f ? cur.g : cur.f;
    const long dbig = reduce_f ? df : dg;
    const long dsmall = reduce_f ? dg : df;
    if (dbig % dsmall != 0) {
      out.reason = "leading forms not power-related";
      return out;
    }
    const auto k = static_cast<unsigned>(dbig / dsmall);
    const Poly2 small_pow = small.pow(k);
    const Poly2 lf_big = big.top_form();
    const Poly2 lf_pow = small_pow.top_form();
    const Rat c = lf_big.leading_coeff() / lf_pow.leading_coeff();
    if (!(lf_big == c * lf_pow)) {
      out.reason = "leading forms not power-related";
      return out;
    }
    UniPoly u = UniPoly::monomial(k, -c);
    Poly2 reduced = big - c * small_pow;
    if (reduce_f) {
      right.emplace_back(ElemX{std::move(u)});
      cur.f = std::move(reduced);
    } else {
      right.emplace_back(ElemY{std::move(u)});
      cur.g = std::move(reduced);
    }
    const long nf = cur.f.deg().value_or(-1);
    const long ng = cur.g.deg().value_or(-1);
    if (nf + ng >= df + dg) throw std::logic_error("automorphism reduction failed to lower the degree");
  }
}

long uniform_int(Rng& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

namespace {

long nonzero_int(Rng& rng, long bound) {
  long v = uniform_int(rng, -bound, bound - 1);
  return v >= 0 ? v + 1 : v;
}

UniPoly random_unipoly(Rng& rng, unsigned deg, long bound) {
  std::vector<Rat> c(deg + 1);
  for (unsigned k = 0; k < deg; ++k) c[k] = uniform_int(rng, -bound, bound);
  c[deg] = nonzero_int(rng, bound);
  return UniPoly(std::move(c));
}

}  // namespace

TameAuto random_tame(Rng& rng, const TameParams& params) {
  if (params.coeff_bound < 1) throw std::invalid_argument("coeff_bound must be positive");
  if (params.deg_bound < 1) throw std::invalid_argument("deg_bound must be positive");
  TameAuto t;
  for (unsigned n = 0; n < params.n_moves; ++n) {
    switch (uniform_int(rng, 0, 2)) {
      case 0: {
        auto d = static_cast<unsigned>(uniform_int(rng, 1, params.deg_bound));
        t.moves.emplace_back(ElemX{random_unipoly(rng, d, params.coeff_bound)});
        break;
      }
      case 1: {
        auto d = static_cast<unsigned>(uniform_int(rng, 1, params.deg_bound));
        t.moves.emplace_back(ElemY{random_unipoly(rng, d, params.coeff_bound)});
        break;
      }
      default: {
        Affine a;
        do {
          for (auto& row : a.m) {
            for (auto& v : row) v = uniform_int(rng, -params.coeff_bound, params.coeff_bound);
          }
        } while (a.det() == 0);
        for (auto& v : a.b) v = uniform_int(rng, -params.coeff_bound, params.coeff_bound);
        t.moves.emplace_back(a);
        break;
      }
    }
  }
  return t;
}

TameAuto random_tame(std::uint64_t seed, const TameParams& params) {
  Rng rng(seed);
  return random_tame(rng, params);
}

}  // namespace retractlab
