#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "retractlab/poly2.hpp"
#include "retractlab/rational.hpp"
#include "retractlab/unipoly.hpp"

namespace retractlab {

/// Coefficient field of the free algebra: the rationals (p == 0) or F_p.
/// F_p elements are stored as integer Rats in [0, p).
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return Field{0}; }
  /// p must be a prime below 2^31; primality is checked.
  static Field prime(std::uint64_t p);
  /// "q" or "fp:<p>".
  static Field parse(const std::string& tag);

  bool is_rational() const { return p == 0; }
  /// Image of a rational in this field. Throws if a denominator vanishes mod p.
  Rat from(const Rat& r) const;
  Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
  Rat neg(const Rat& a) const { return reduce(-a); }
  std::string tag() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Rat reduce(const Rat& a) const;
};

/// Element of the free monoid on {x, y}; letters are the chars 'x' and 'y'.
using Word = std::string;

/// Longer words are larger; among equal lengths 'x' outranks 'y'.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

inline constexpr unsigned kDefaultNcDegreeCap = 12;

/// Noncommutative polynomial in F<x, y>. Every product whose total degree
/// would exceed the cap throws std::length_error.
class NcPoly {
 public:
  using TermMap = std::map<Word, Rat, WordOrder>;

  explicit NcPoly(Field field = Field::rationals(), unsigned degree_cap = kDefaultNcDegreeCap);

  static NcPoly constant(const Rat& c, Field field = Field::rationals(), unsigned cap = kDefaultNcDegreeCap);
  static NcPoly word(const Word& w, const Rat& c = Rat(1), Field field = Field::rationals(),
                     unsigned cap = kDefaultNcDegreeCap);
  static NcPoly x(Field field = Field::rationals(), unsigned cap = kDefaultNcDegreeCap);
  static NcPoly y(Field field = Field::rationals(), unsigned cap = kDefaultNcDegreeCap);

  const Field& field() const { return field_; }
  unsigned degree_cap() const { return cap_; }
  NcPoly with_cap(unsigned cap) const;
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Degree deg() const;
  Rat coeff(const Word& w) const;
  /// Sum of the terms of the given word length.
  NcPoly homogeneous_part(std::size_t len) const;
  NcPoly top_form() const;
  NcPoly pow(unsigned e) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Rat& c, const NcPoly& a);
  friend NcPoly operator-(const NcPoly& a);

  /// Equality of terms and field; the degree cap is not compared.
  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Canonical text, longest words first, e.g. "2*xyx - yxx".
  std::string to_string() const;

  /// Throws std::invalid_argument when o lives over a different field.
  void check_same_field(const NcPoly& o) const;

 private:
  void add_term(const Word& w, const Rat& c);

  Field field_;
  unsigned cap_;
  TermMap terms_;
};

/// Images of x and y.
struct NcEndo {
  NcPoly f;
  NcPoly g;
};

NcPoly nc_add(const NcPoly& a, const NcPoly& b);
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
NcPoly commutator(const NcPoly& a, const NcPoly& b);

/// p(phi.f, phi.g), letters replaced in word order.
NcPoly nc_substitute(const NcPoly& p, const NcEndo& phi);

/// u(p) for a univariate u over the rationals, coefficients mapped into p's field.
NcPoly nc_univariate_at(const UniPoly& u, const NcPoly& p);

/// Collapse each word to its commutative monomial. Rationals only.
Poly2 abelianization(const NcPoly& p);

/// u*v == v*u.
bool commute_check(const NcPoly& u, const NcPoly& v);

/// (x, y + xy - yx) over the given field.
NcEndo example_endomorphism(Field field, unsigned cap = kDefaultNcDegreeCap);

struct Example1Report {
  NcPoly r;
  NcPoly r_image;            // r' = phi(r)
  NcPoly difference;         // r' - r
  NcPoly s_image;            // s(r')
  NcPoly t_image;            // t(r')
  NcPoly retracted;          // pi'(r')
  NcPoly pi_pi_x;            // pi'(pi'(x))
  NcPoly pi_pi_y;            // pi'(pi'(y))
  bool difference_abelianizes_to_zero = false;
  bool retraction_fixes_image = false;
  bool retraction_idempotent = false;
  bool components_commute = false;
  // Leading-form obstruction for phi itself.
  NcPoly lead_f;
  NcPoly lead_g;
  bool leading_forms_commute = true;

  bool passed() const {
    return difference_abelianizes_to_zero && retraction_fixes_image && retraction_idempotent &&
           components_commute && !leading_forms_commute;
  }
};

/// Checks that (x, y + xy - yx) sends the retract F[r], certified by
/// (s, t), to the retract F[r'] certified by (s(r'), t(r')). Throws
/// std::invalid_argument when (s(r), t(r)) does not fix r.
Example1Report example1_verify(const NcPoly& r, const UniPoly& s, const UniPoly& t);

struct NcCertificate {
  NcPoly r;
  UniPoly s;
  UniPoly t;
};

/// Seeded free-algebra retract certificates. seed % 3 picks the shape:
///   0: r = x + (words containing y), (s, t) = (z, 0)
///   1: r = y + (words containing x), (s, t) = (0, z)
///   2: r = x + c + (words containing y), (s, t) = (z - c, 0)
/// Extra words have length at most max_word and coefficients in [-3, 3].
NcCertificate random_nc_certificate(std::uint64_t seed, Field field, unsigned max_word = 2,
                                    unsigned cap = kDefaultNcDegreeCap);

/// Whether the abelianized difference vanishes; over F_p the collapse is
/// done with F_p coefficients.
bool abelianizes_to_zero(const NcPoly& p);

}  // namespace retractlab
