#include "retractlab/poly2.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "term_format.hpp"

namespace retractlab {

namespace {

std::uint64_t pack(Monomial m) { return (static_cast<std::uint64_t>(m.j) << 32) | m.i; }
Monomial unpack(std::uint64_t k) {
  return Monomial{static_cast<std::uint32_t>(k & 0xffffffffU), static_cast<std::uint32_t>(k >> 32)};
}

std::string monomial_text(Monomial m) {
  std::string out;
  if (m.j > 0) out += m.j == 1 ? "x" : "x^" + std::to_string(m.j);
  if (m.i > 0) {
    if (!out.empty()) out += "*";
    out += m.i == 1 ? "y" : "y^" + std::to_string(m.i);
  }
  return out;
}

}  // namespace

Poly2::Poly2(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Poly2 Poly2::constant(const Rat& c) { return term(c, Monomial{}); }
Poly2 Poly2::x() { return term(Rat(1), Monomial{0, 1}); }
Poly2 Poly2::y() { return term(Rat(1), Monomial{1, 0}); }

Poly2 Poly2::term(const Rat& c, Monomial m) {
  Poly2 p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Poly2 Poly2::in_x(const UniPoly& u) {
  Poly2 p;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    if (u.coeffs()[k] != 0) p.terms_.emplace(Monomial{0, static_cast<std::uint32_t>(k)}, u.coeffs()[k]);
  }
  return p;
}

Poly2 Poly2::in_y(const UniPoly& u) {
  Poly2 p;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    if (u.coeffs()[k] != 0) p.terms_.emplace(Monomial{static_cast<std::uint32_t>(k), 0}, u.coeffs()[k]);
  }
  return p;
}

Rat Poly2::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Degree Poly2::deg() const {
  if (terms_.empty()) return Degree::neg_inf();
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Degree Poly2::deg_x() const {
  if (terms_.empty()) return Degree::neg_inf();
  return static_cast<long>(terms_.rbegin()->first.j);
}

Degree Poly2::deg_y() const {
  if (terms_.empty()) return Degree::neg_inf();
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.i));
  return d;
}

Monomial Poly2::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("no leading monomial: zero polynomial");
  return terms_.rbegin()->first;
}

Rat Poly2::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("no leading monomial: zero polynomial");
  return terms_.rbegin()->second;
}

Poly2 Poly2::homogeneous_part(long d) const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Poly2 Poly2::top_form() const {
  if (terms_.empty()) return {};
  return homogeneous_part(deg().value());
}

Poly2 Poly2::dx() const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.j > 0) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.i, m.j - 1}, c * static_cast<unsigned long>(m.j));
  }
  return out;
}

Poly2 Poly2::dy() const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.i > 0) out.terms_.emplace(Monomial{m.i - 1, m.j}, c * static_cast<unsigned long>(m.i));
  }
  return out;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result = constant(Rat(1));
  Poly2 base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly2 Poly2::divide_by_y() const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.i == 0) throw std::domain_error("polynomial is not divisible by y");
    out.terms_.emplace_hint(out.terms_.end(), Monomial{m.i - 1, m.j}, c);
  }
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<std::uint64_t, Rat> acc;
  acc.reserve(a.size() * b.size());
  Rat tmp;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[pack(ma * mb)] += tmp;
    }
  }
  std::vector<std::pair<std::uint64_t, Rat*>> keys;
  keys.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (c != 0) keys.emplace_back(k, &c);
  }
  std::sort(keys.begin(), keys.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  Poly2 out;
  for (auto& [k, c] : keys) out.terms_.emplace_hint(out.terms_.end(), unpack(k), std::move(*c));
  return out;
}

Poly2 operator-(Poly2 a) {
  for (auto& kv : a.terms_) kv.second = -kv.second;
  return a;
}

std::string Poly2::to_string() const {
  detail::TermWriter w;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) w.add(it->second, monomial_text(it->first));
  return w.str();
}

namespace {

// Horner evaluation shared by the bivariate and univariate substitutions:
// p = sum_j x^j c_j(y), evaluated as ((c_J(b) a + c_{J-1}(b)) a + ...).
template <class R, class FromRat>
R horner2(const Poly2& p, const R& a, const R& b, FromRat from_rat) {
  if (p.is_zero()) return R{};
  // Columns by x-exponent, each a list of (y-exponent, coeff) descending.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, const Rat*>>> cols;
  for (const auto& [m, c] : p.terms()) cols[m.j].emplace_back(m.i, &c);

  auto eval_col = [&](std::vector<std::pair<std::uint32_t, const Rat*>>& col) {
    std::sort(col.begin(), col.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    R acc{};
    std::uint32_t cur = col.front().first;
    for (const auto& [e, c] : col) {
      for (; cur > e; --cur) acc = acc * b;
      acc = acc + from_rat(*c);
    }
    for (; cur > 0; --cur) acc = acc * b;
    return acc;
  };

  R acc{};
  std::uint32_t cur = cols.rbegin()->first;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    for (; cur > it->first; --cur) acc = acc * a;
    acc = acc + eval_col(it->second);
  }
  for (; cur > 0; --cur) acc = acc * a;
  return acc;
}

}  // namespace

Poly2 substitute2(const Poly2& p, const Poly2& a, const Poly2& b) {
  return horner2<Poly2>(p, a, b, [](const Rat& c) { return Poly2::constant(c); });
}

UniPoly substitute1(const Poly2& p, const UniPoly& s, const UniPoly& t) {
  return horner2<UniPoly>(p, s, t, [](const Rat& c) { return UniPoly::constant(c); });
}

Poly2 substitute_z(const UniPoly& u, const Poly2& p) {
  Poly2 acc;
  const auto& c = u.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * p;
    acc += Poly2::constant(*it);
  }
  return acc;
}

long monomial_degree_under(std::uint32_t i, std::uint32_t j, long ds, long dt) {
  return static_cast<long>(i) * dt + static_cast<long>(j) * ds;
}

}  // namespace retractlab
