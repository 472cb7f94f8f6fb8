#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "retractlab/rational.hpp"

namespace retractlab {

/// Dense univariate polynomial in z over the rationals. coeffs()[k] is the
/// coefficient of z^k; trailing zeros are never stored.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly z();
  /// c * z^k
  static UniPoly monomial(std::size_t k, const Rat& c = Rat(1));

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k (zero past the end).
  Rat coeff(std::size_t k) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree deg() const;
  /// Throws on the zero polynomial.
  const Rat& leading_coeff() const;

  UniPoly pow(unsigned e) const;
  /// this(q(z))
  UniPoly compose(const UniPoly& q) const;
  Rat evaluate(const Rat& v) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Canonical text, highest power first, e.g. "z^2 - 1/2*z + 3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace retractlab
