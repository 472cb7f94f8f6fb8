#include "retractlab/retracts.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "retractlab/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace retractlab {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Retraction Retraction::make(Poly2 p, UniPoly s, UniPoly t) {
  if (!verify_retract_generator(p, s, t)) {
    throw std::invalid_argument("p(s, t) != z: not a retraction certificate for " + p.to_string());
  }
  return Retraction(std::move(p), std::move(s), std::move(t));
}

RetractCertificate RetractCertificate::normal_form(const Poly2& h) {
  RetractCertificate c;
  c.kind = Kind::NormalForm;
  c.h = h;
  c.p = Poly2::x() + Poly2::y() * h;
  c.s = UniPoly::z();
  c.t = UniPoly{};
  return c;
}

RetractCertificate RetractCertificate::direct(const Poly2& p, const UniPoly& s, const UniPoly& t) {
  RetractCertificate c;
  c.kind = Kind::Direct;
  c.p = p;
  c.s = s;
  c.t = t;
  return c;
}

Retraction RetractCertificate::retraction() const {
  switch (kind) {
    case Kind::NormalForm:
      if (!(p == Poly2::x() + Poly2::y() * h)) throw std::invalid_argument("normal-form certificate does not match p");
      break;
    case Kind::Conjugated:
      if (!(to_endo(sigma).apply(p) == Poly2::x() + Poly2::y() * h)) {
        throw std::invalid_argument("conjugated certificate: sigma(p) != x + y*h");
      }
      break;
    case Kind::Direct:
      break;
  }
  return Retraction::make(p, s, t);
}

bool verify_retract_generator(const Poly2& p, const UniPoly& s, const UniPoly& t) {
  if (p.is_constant()) throw std::invalid_argument("constant generates no proper retract");
  return substitute1(p, s, t) == UniPoly::z();
}

RetractionEndo retraction_endo(const Retraction& r) {
  RetractionEndo out;
  out.pi = Endo{substitute_z(r.s(), r.p()), substitute_z(r.t(), r.p())};
  // pi(p) = p(s(p), t(p)) = (p(s, t))(p); pi(s(p)) = s(pi(p)).
  out.pi_of_p = substitute_z(substitute1(r.p(), r.s(), r.t()), r.p());
  out.pi_squared = Endo{substitute_z(r.s(), out.pi_of_p), substitute_z(r.t(), out.pi_of_p)};
  if (!(out.pi_of_p == r.p())) throw std::logic_error("retraction does not fix its generator");
  if (!(out.pi_squared == out.pi)) throw std::logic_error("retraction is not idempotent");
  return out;
}

bool is_constant_times_square(const Poly2& p) {
  if (p.is_zero()) return true;
  if (p.is_constant()) return true;
  const Monomial lm = p.leading_monomial();
  if (lm.i % 2 != 0 || lm.j % 2 != 0) return false;
  const Poly2 monic = p * (1 / p.leading_coeff());
  const long box_i = p.deg_y().value() / 2;
  const long box_j = p.deg_x().value() / 2;

  const Poly2 lead = Poly2::term(Rat(1), Monomial{lm.i / 2, lm.j / 2});
  Poly2 root = lead;
  Monomial last = lead.leading_monomial();
  for (;;) {
    const Poly2 rem = monic - root * root;
    if (rem.is_zero()) return true;
    const Monomial rm = rem.leading_monomial();
    const Monomial l0 = lead.leading_monomial();
    if (rm.i < l0.i || rm.j < l0.j) return false;
    const Monomial next{rm.i - l0.i, rm.j - l0.j};
    if (!(next < last) || static_cast<long>(next.i) > box_i || static_cast<long>(next.j) > box_j) return false;
    root += Poly2::term(rem.leading_coeff() / 2, next);
    last = next;
  }
}

namespace {

// Candidate order used for tie-breaking: smaller magnitude first, positive
// before negative.
bool canonical_less(const Rat& a, const Rat& b) {
  const Rat aa = abs(a);
  const Rat bb = abs(b);
  if (aa != bb) return aa < bb;
  return a > b;
}

std::vector<Rat> sorted_canonical(std::vector<Rat> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

// Coefficient polynomials of p grouped by one exponent: by_y[k](X) collects
// the terms y^k x^j as X^j, by_x[k](Y) the terms x^k y^i as Y^i.
std::map<std::uint32_t, UniPoly> group_by(const Poly2& p, bool by_y_exponent) {
  std::map<std::uint32_t, std::vector<Rat>> raw;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t key = by_y_exponent ? m.i : m.j;
    const std::uint32_t power = by_y_exponent ? m.j : m.i;
    auto& v = raw[key];
    if (v.size() <= power) v.resize(power + 1);
    v[power] = c;
  }
  std::map<std::uint32_t, UniPoly> out;
  for (auto& [k, v] : raw) out.emplace(k, UniPoly(std::move(v)));
  return out;
}

// One coordinate constant (value c), the other linear: p(c, y) or p(x, c)
// must have degree exactly 1 in the remaining variable.
std::optional<std::pair<UniPoly, UniPoly>> search_constant_slot(const Poly2& p, bool s_is_constant,
                                                                const std::vector<Rat>& candidates) {
  // When s is constant we need deg_y p(c, y) == 1, so group by y-exponent.
  const auto groups = group_by(p, s_is_constant);
  auto coeff_poly = [&](std::uint32_t k) {
    auto it = groups.find(k);
    return it == groups.end() ? UniPoly{} : it->second;
  };
  std::vector<Rat> values;
  const UniPoly* constraint = nullptr;
  for (const auto& [k, u] : groups) {
    if (k >= 2) {
      constraint = &u;
      break;
    }
  }
  values = constraint != nullptr ? sorted_canonical(rational_roots(*constraint)) : candidates;
  const UniPoly c0 = coeff_poly(0);
  const UniPoly c1 = coeff_poly(1);
  for (const Rat& c : values) {
    bool ok = c1.evaluate(c) != 0;
    for (const auto& [k, u] : groups) {
      if (k >= 2 && u.evaluate(c) != 0) ok = false;
    }
    if (!ok) continue;
    // c1(c) * v + c0(c) = z
    const Rat a = c1.evaluate(c);
    const UniPoly lin = (UniPoly::z() - UniPoly::constant(c0.evaluate(c))) * (1 / a);
    const UniPoly fixed = UniPoly::constant(c);
    return s_is_constant ? std::make_pair(fixed, lin) : std::make_pair(lin, fixed);
  }
  return std::nullopt;
}

// Both coordinates nonconstant. Coefficients are fixed from the top down:
// level m pins the coefficient of z^(w - m) of p(s, t), which is affine in
// the newly exposed coefficients s[ds - m], t[dt - m].
class SlotSearch {
 public:
  SlotSearch(const Poly2& p, long ds, long dt, const std::vector<Rat>& candidates)
      : p_(p), ds_(ds), dt_(dt), cand_(candidates), sc_(ds + 1), tc_(dt + 1) {
    for (const auto& [m, c] : p.terms()) w_ = std::max(w_, monomial_degree_under(m.i, m.j, ds, dt));
  }

  std::optional<std::pair<UniPoly, UniPoly>> run() {
    // Top weighted form T; T(a, b) must equal the top target.
    std::vector<std::pair<Monomial, Rat>> top;
    for (const auto& [m, c] : p_.terms()) {
      if (monomial_degree_under(m.i, m.j, ds_, dt_) == w_) top.emplace_back(m, c);
    }
    const Rat target0 = w_ == 1 ? Rat(1) : Rat(0);
    for (const Rat& b : cand_) {
      if (b == 0) continue;
      std::vector<Rat> coeffs;
      for (const auto& [m, c] : top) {
        if (coeffs.size() <= m.j) coeffs.resize(m.j + 1);
        Rat bp(1);
        for (std::uint32_t e = 0; e < m.i; ++e) bp *= b;
        coeffs[m.j] += c * bp;
      }
      const UniPoly lead_eq = UniPoly(coeffs) - UniPoly::constant(target0);
      std::vector<Rat> as;
      if (lead_eq.is_zero()) {
        as = cand_;
      } else {
        as = sorted_canonical(rational_roots(lead_eq));
      }
      for (const Rat& a : as) {
        if (a == 0) continue;
        sc_[ds_] = a;
        tc_[dt_] = b;
        if (dfs(1)) return std::make_pair(UniPoly(sc_), UniPoly(tc_));
      }
    }
    return std::nullopt;
  }

 private:
  Rat coefficient(long degree) const {
    if (degree < 0) return Rat(0);
    return substitute1(p_, UniPoly(sc_), UniPoly(tc_)).coeff(static_cast<std::size_t>(degree));
  }

  bool dfs(long m) {
    if (m > std::max(ds_, dt_)) return substitute1(p_, UniPoly(sc_), UniPoly(tc_)) == UniPoly::z();
    const bool has_a = m <= ds_;
    const bool has_b = m <= dt_;
    const long ia = ds_ - m;
    const long ib = dt_ - m;
    const long degree = w_ - m;
    const Rat target = degree == 1 ? Rat(1) : Rat(0);

    const Rat gamma = coefficient(degree);
    Rat alpha(0), beta(0);
    if (has_a) {
      sc_[ia] = 1;
      alpha = coefficient(degree) - gamma;
      sc_[ia] = 0;
    }
    if (has_b) {
      tc_[ib] = 1;
      beta = coefficient(degree) - gamma;
      tc_[ib] = 0;
    }

    auto attempt = [&](const Rat& a, const Rat& b) {
      if (has_a) sc_[ia] = a;
      if (has_b) tc_[ib] = b;
      const bool found = dfs(m + 1);
      if (!found) {
        if (has_a) sc_[ia] = 0;
        if (has_b) tc_[ib] = 0;
      }
      return found;
    };

    if (has_a && alpha != 0) {
      if (has_b) {
        for (const Rat& b : cand_) {
          if (attempt((target - gamma - beta * b) / alpha, b)) return true;
        }
        return false;
      }
      return attempt((target - gamma) / alpha, Rat(0));
    }
    if (has_b && beta != 0) {
      if (has_a) {
        for (const Rat& a : cand_) {
          if (attempt(a, (target - gamma - alpha * a) / beta)) return true;
        }
        return false;
      }
      return attempt(Rat(0), (target - gamma) / beta);
    }
    if (gamma != target) return false;
    if (has_a && has_b) {
      for (const Rat& a : cand_) {
        for (const Rat& b : cand_) {
          if (attempt(a, b)) return true;
        }
      }
      return false;
    }
    if (has_a || has_b) {
      for (const Rat& v : cand_) {
        if (attempt(v, v)) return true;
      }
      return false;
    }
    return attempt(Rat(0), Rat(0));
  }

  const Poly2& p_;
  long ds_;
  long dt_;
  const std::vector<Rat>& cand_;
  std::vector<Rat> sc_;
  std::vector<Rat> tc_;
  long w_ = 0;
};

}  // namespace

std::optional<std::pair<UniPoly, UniPoly>> search_degree_slot(const Poly2& p, long ds, long dt,
                                                              const std::vector<Rat>& candidates) {
  if (p.is_constant()) throw std::invalid_argument("constant generates no proper retract");
  if (ds < 0 || dt < 0) throw std::invalid_argument("degree slots are non-negative");
  if (ds == 0 && dt == 0) return std::nullopt;
  // p(c, t) has degree deg_y(p(c, y)) * deg t, so the free side must be linear.
  if (ds == 0) return dt == 1 ? search_constant_slot(p, true, candidates) : std::nullopt;
  if (dt == 0) return ds == 1 ? search_constant_slot(p, false, candidates) : std::nullopt;
  return SlotSearch(p, ds, dt, candidates).run();
}

std::vector<std::pair<long, long>> degree_slots(unsigned max_deg) {
  std::vector<std::pair<long, long>> out;
  const long m = max_deg;
  for (long sum = 0; sum <= 2 * m; ++sum) {
    for (long ds = std::max(0L, sum - m); ds <= std::min(sum, m); ++ds) out.emplace_back(ds, sum - ds);
  }
  return out;
}

GeneratorDecision is_retract_generator_bounded(const Poly2& p, const SearchOptions& opts) {
  if (p.is_constant()) throw std::invalid_argument("constant generates no proper retract");
  GeneratorDecision out;
  out.max_deg = opts.max_deg;
  if (is_constant_times_square(p)) {
    out.reason = "square";
    return out;
  }
  const auto slots = degree_slots(opts.max_deg);
  auto finish = [&](std::size_t k, std::pair<UniPoly, UniPoly> st) {
    if (!verify_retract_generator(p, st.first, st.second)) throw std::logic_error("search returned an invalid certificate");
    out.yes = true;
    out.s = std::move(st.first);
    out.t = std::move(st.second);
    out.ds = slots[k].first;
    out.dt = slots[k].second;
    out.reason = "certificate";
  };

  if (opts.execution == Execution::Serial) {
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (auto st = search_degree_slot(p, slots[k].first, slots[k].second, opts.candidates)) {
        finish(k, std::move(*st));
        return out;
      }
    }
  } else {
    std::vector<std::optional<std::pair<UniPoly, UniPoly>>> found(slots.size());
    const auto n = static_cast<long>(slots.size());
    // Lowest slot with a hit so far. Slots past it are skipped; slots before
    // it always run, so the reported slot matches the serial order.
    std::atomic<long> best{n};
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k) {
      if (k > best.load(std::memory_order_relaxed)) continue;
      const auto idx = static_cast<std::size_t>(k);
      found[idx] = search_degree_slot(p, slots[idx].first, slots[idx].second, opts.candidates);
      if (found[idx]) {
        long cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
      }
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (found[k]) {
        finish(k, std::move(*found[k]));
        return out;
      }
    }
  }
  out.reason = "no certificate up to max_deg";
  return out;
}

RetractCertificate make_retract_generator(const TameAuto& sigma, const Poly2& h) {
  const Poly2 target = Poly2::x() + Poly2::y() * h;
  const Endo fwd = to_endo(sigma);
  RetractCertificate c;
  c.kind = sigma.moves.empty() ? RetractCertificate::Kind::NormalForm : RetractCertificate::Kind::Conjugated;
  c.sigma = sigma;
  c.h = h;
  c.p = to_endo(inverse(sigma)).apply(target);
  c.s = substitute1(fwd.f, UniPoly::z(), UniPoly{});
  c.t = substitute1(fwd.g, UniPoly::z(), UniPoly{});
  if (!(fwd.apply(c.p) == target) || !verify_retract_generator(c.p, c.s, c.t)) {
    throw std::logic_error("transported retract certificate failed validation");
  }
  return c;
}

KzDecision generates_Kz(const UniPoly& s, const UniPoly& t, long bound) {
  if (bound < 1) throw std::invalid_argument("generates_Kz: bound must be at least 1");
  KzDecision out;
  out.bound = bound;
  if (s.is_constant() && t.is_constant()) return out;
  const long ds = s.deg().value_or(0);
  const long dt = t.deg().value_or(0);
  const long max_i = ds > 0 ? bound / ds : 0;
  const long max_j = dt > 0 ? bound / dt : 0;

  struct Col {
    long i, j, weight;
  };
  std::vector<Col> cols;
  for (long i = 0; i <= max_i; ++i) {
    for (long j = 0; j <= max_j; ++j) {
      if (i * ds + j * dt <= bound) cols.push_back({i, j, i * ds + j * dt});
    }
  }
  std::stable_sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) { return a.weight < b.weight; });

  std::vector<UniPoly> sp{UniPoly::constant(Rat(1))};
  for (long i = 1; i <= max_i; ++i) sp.push_back(sp.back() * s);
  std::vector<UniPoly> tp{UniPoly::constant(Rat(1))};
  for (long j = 1; j <= max_j; ++j) tp.push_back(tp.back() * t);

  // Echelon basis keyed by leading degree. Element k is
  // (product[col] - sum c * basis[m]) / lead, with every m < k.
  struct Basis {
    UniPoly poly;
    std::size_t col;
    Rat lead;
    std::vector<std::pair<std::size_t, Rat>> history;
  };
  std::vector<Basis> basis;
  std::map<long, std::size_t> by_degree;

  auto reduce = [&](UniPoly p, std::vector<std::pair<std::size_t, Rat>>& history) {
    while (!p.is_zero()) {
      const auto it = by_degree.find(p.deg().value_or(0));
      if (it == by_degree.end()) break;
      const Rat c = p.leading_coeff();
      p -= c * basis[it->second].poly;
      history.emplace_back(it->second, c);
    }
    return p;
  };

  std::vector<std::pair<std::size_t, Rat>> z_history;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::pair<std::size_t, Rat>> history;
    UniPoly r = reduce(sp[static_cast<std::size_t>(cols[c].i)] * tp[static_cast<std::size_t>(cols[c].j)], history);
    if (r.is_zero()) continue;
    const Rat lead = r.leading_coeff();
    r *= 1 / lead;
    by_degree.emplace(r.deg().value_or(0), basis.size());
    basis.push_back({std::move(r), c, lead, std::move(history)});
    z_history.clear();
    if (reduce(UniPoly::z(), z_history).is_zero()) {
      out.yes = true;
      break;
    }
  }
  if (!out.yes) return out;

  // Unwind z = sum c_k basis[k] into products, newest element first.
  std::vector<Rat> coef(basis.size());
  for (const auto& [k, c] : z_history) coef[k] += c;
  std::vector<Rat> col_coef(cols.size());
  for (std::size_t k = basis.size(); k-- > 0;) {
    if (coef[k] == 0) continue;
    const Rat w = coef[k] / basis[k].lead;
    col_coef[basis[k].col] += w;
    for (const auto& [m, c] : basis[k].history) coef[m] -= w * c;
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (col_coef[c] != 0) out.combination.push_back({cols[c].i, cols[c].j, col_coef[c]});
  }
  std::sort(out.combination.begin(), out.combination.end(),
            [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  return out;
}

}  // namespace retractlab
