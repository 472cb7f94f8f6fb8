#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "retractlab/rational.hpp"
#include "retractlab/unipoly.hpp"

namespace retractlab {

/// y^i x^j. Ordered lexicographically with x >> y: the x-exponent decides
/// first, the y-exponent breaks ties.
struct Monomial {
  std::uint32_t i = 0;  // exponent of y
  std::uint32_t j = 0;  // exponent of x

  constexpr long total_degree() const { return static_cast<long>(i) + static_cast<long>(j); }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{a.i + b.i, a.j + b.j};
  }
};

/// Sparse polynomial in x, y over the rationals. Zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
class Poly2 {
 public:
  using TermMap = std::map<Monomial, Rat>;

  Poly2() = default;
  explicit Poly2(TermMap terms);

  static Poly2 constant(const Rat& c);
  static Poly2 x();
  static Poly2 y();
  static Poly2 term(const Rat& c, Monomial m);
  /// Lift u(z) to u(x) or u(y).
  static Poly2 in_x(const UniPoly& u);
  static Poly2 in_y(const UniPoly& u);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(Monomial m) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rat constant_term() const { return coeff(Monomial{}); }

  Degree deg() const;
  Degree deg_x() const;
  Degree deg_y() const;

  /// Lex-largest monomial (x >> y). Throws std::domain_error on zero.
  Monomial leading_monomial() const;
  Rat leading_coeff() const;
  /// Sum of the terms of total degree d.
  Poly2 homogeneous_part(long d) const;
  /// Homogeneous part of top total degree.
  Poly2 top_form() const;

  Poly2 dx() const;
  Poly2 dy() const;
  Poly2 pow(unsigned e) const;

  /// Nonzero iff every term is divisible by y; returns this / y. Throws otherwise.
  Poly2 divide_by_y() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rat& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 a) { return a *= c; }
  friend Poly2 operator-(Poly2 a);

  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Canonical text: terms in descending lex order, e.g. "3*x^2*y - 1/2*y".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// p(a, b).
Poly2 substitute2(const Poly2& p, const Poly2& a, const Poly2& b);

/// p(s(z), t(z)).
UniPoly substitute1(const Poly2& p, const UniPoly& s, const UniPoly& t);

/// u(p): z replaced by a bivariate polynomial.
Poly2 substitute_z(const UniPoly& u, const Poly2& p);

/// deg of y^i x^j under x -> s, y -> t when deg s = ds, deg t = dt.
long monomial_degree_under(std::uint32_t i, std::uint32_t j, long ds, long dt);

}  // namespace retractlab
