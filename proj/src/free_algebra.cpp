#include "retractlab/free_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "retractlab/endo.hpp"
#include "term_format.hpp"

namespace retractlab {

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
  mpz_class m(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(const std::string& tag) {
  if (tag == "q") return rationals();
  if (tag.rfind("fp:", 0) == 0) {
    const std::string digits = tag.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 12) {
      throw std::invalid_argument("bad field tag: " + tag);
    }
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("bad field tag: " + tag + " (expected q or fp:<p>)");
}

std::string Field::tag() const { return p == 0 ? "q" : "fp:" + std::to_string(p); }

Rat Field::reduce(const Rat& a) const {
  if (p == 0) return a;
  if (a.get_den() != 1) return from(a);
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Rat(r);
}

Rat Field::from(const Rat& r) const {
  if (p == 0) return r;
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), r.get_den_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("denominator of " + to_string(r) + " vanishes in " + tag());
  }
  mpz_class v = r.get_num() * inv;
  mpz_class out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return Rat(out);
}

NcPoly::NcPoly(Field field, unsigned degree_cap) : field_(field), cap_(degree_cap) {}

NcPoly NcPoly::constant(const Rat& c, Field field, unsigned cap) { return word("", c, field, cap); }

NcPoly NcPoly::word(const Word& w, const Rat& c, Field field, unsigned cap) {
  for (char ch : w) {
    if (ch != 'x' && ch != 'y') throw std::invalid_argument("words are over {x, y}: " + w);
  }
  if (w.size() > cap) throw std::length_error("word exceeds the free-algebra degree cap");
  NcPoly p(field, cap);
  p.add_term(w, field.from(c));
  return p;
}

NcPoly NcPoly::x(Field field, unsigned cap) { return word("x", Rat(1), field, cap); }
NcPoly NcPoly::y(Field field, unsigned cap) { return word("y", Rat(1), field, cap); }

NcPoly NcPoly::with_cap(unsigned cap) const {
  NcPoly out = *this;
  out.cap_ = cap;
  return out;
}

void NcPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void NcPoly::check_same_field(const NcPoly& o) const {
  if (!(field_ == o.field_)) {
    throw std::invalid_argument("mixed fields: " + field_.tag() + " and " + o.field_.tag());
  }
}

Degree NcPoly::deg() const {
  if (terms_.empty()) return Degree::neg_inf();
  return static_cast<long>(terms_.rbegin()->first.size());
}

Rat NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

NcPoly NcPoly::homogeneous_part(std::size_t len) const {
  NcPoly out(field_, cap_);
  for (const auto& [w, c] : terms_) {
    if (w.size() == len) out.terms_.emplace(w, c);
  }
  return out;
}

NcPoly NcPoly::top_form() const {
  if (terms_.empty()) return NcPoly(field_, cap_);
  return homogeneous_part(terms_.rbegin()->first.size());
}

NcPoly NcPoly::pow(unsigned e) const {
  NcPoly result = constant(Rat(1), field_, cap_);
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_same_field(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_same_field(o);
  for (const auto& [w, c] : o.terms_) add_term(w, field_.neg(c));
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_same_field(b);
  NcPoly out(a.field_, a.cap_);
  if (a.is_zero() || b.is_zero()) return out;
  // No zero divisors: the degree of the product is the sum of the degrees.
  if (static_cast<unsigned long>(a.deg().value() + b.deg().value()) > a.cap_) {
    throw std::length_error("free-algebra degree cap " + std::to_string(a.cap_) + " exceeded");
  }
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, a.field_.mul(ca, cb));
  }
  return out;
}

NcPoly operator*(const Rat& c, const NcPoly& a) {
  NcPoly out(a.field_, a.cap_);
  const Rat k = a.field_.from(c);
  for (const auto& [w, v] : a.terms_) out.add_term(w, a.field_.mul(k, v));
  return out;
}

NcPoly operator-(const NcPoly& a) { return Rat(-1) * a; }

std::string NcPoly::to_string() const {
  detail::TermWriter w;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) w.add(it->second, it->first);
  return w.str();
}

NcPoly nc_add(const NcPoly& a, const NcPoly& b) { return a + b; }
NcPoly nc_mul(const NcPoly& a, const NcPoly& b) { return a * b; }
NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

NcPoly nc_substitute(const NcPoly& p, const NcEndo& phi) {
  p.check_same_field(phi.f);
  p.check_same_field(phi.g);
  NcPoly out(p.field(), p.degree_cap());
  const NcPoly one = NcPoly::constant(Rat(1), p.field(), p.degree_cap());
  for (const auto& [w, c] : p.terms()) {
    if (std::any_of(w.begin(), w.end(), [&](char ch) { return (ch == 'x' ? phi.f : phi.g).is_zero(); })) {
      continue;
    }
    NcPoly acc = one;
    for (char ch : w) acc = acc * (ch == 'x' ? phi.f : phi.g);
    out += c * acc;
  }
  return out;
}

NcPoly nc_univariate_at(const UniPoly& u, const NcPoly& p) {
  NcPoly out(p.field(), p.degree_cap());
  NcPoly power = NcPoly::constant(Rat(1), p.field(), p.degree_cap());
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    if (k > 0) power = power * p;
    if (u.coeffs()[k] != 0) out += u.coeffs()[k] * power;
  }
  return out;
}

Poly2 abelianization(const NcPoly& p) {
  if (!p.field().is_rational()) {
    throw std::invalid_argument("abelianization target is the rational polynomial ring only");
  }
  Poly2 out;
  for (const auto& [w, c] : p.terms()) {
    auto xs = static_cast<std::uint32_t>(std::count(w.begin(), w.end(), 'x'));
    auto ys = static_cast<std::uint32_t>(w.size()) - xs;
    out += Poly2::term(c, Monomial{ys, xs});
  }
  return out;
}

bool abelianizes_to_zero(const NcPoly& p) {
  std::map<std::pair<std::size_t, std::size_t>, Rat> collapsed;
  for (const auto& [w, c] : p.terms()) {
    auto xs = static_cast<std::size_t>(std::count(w.begin(), w.end(), 'x'));
    auto& slot = collapsed[{xs, w.size() - xs}];
    slot = p.field().add(slot, c);
  }
  return std::all_of(collapsed.begin(), collapsed.end(), [](const auto& kv) { return kv.second == 0; });
}

bool commute_check(const NcPoly& u, const NcPoly& v) { return u * v == v * u; }

NcEndo example_endomorphism(Field field, unsigned cap) {
  NcPoly x = NcPoly::x(field, cap);
  NcPoly y = NcPoly::y(field, cap);
  return NcEndo{x, y + x * y - y * x};
}

Example1Report example1_verify(const NcPoly& r, const UniPoly& s, const UniPoly& t) {
  if (r.deg() < Degree(1)) throw std::invalid_argument("input is not a retract certificate: r is constant");
  const NcEndo pi{nc_univariate_at(s, r), nc_univariate_at(t, r)};
  if (!(nc_substitute(r, pi) == r)) throw std::invalid_argument("input is not a retract certificate");

  Example1Report rep{r, r, r, r, r, r, r, r, false, false, false, false, r, r, true};
  const NcEndo phi = example_endomorphism(r.field(), r.degree_cap());
  rep.r_image = nc_substitute(r, phi);
  rep.difference = rep.r_image - r;
  rep.difference_abelianizes_to_zero = abelianizes_to_zero(rep.difference);

  rep.s_image = nc_univariate_at(s, rep.r_image);
  rep.t_image = nc_univariate_at(t, rep.r_image);
  const NcEndo pi_prime{rep.s_image, rep.t_image};
  rep.retracted = nc_substitute(rep.r_image, pi_prime);
  rep.retraction_fixes_image = rep.retracted == rep.r_image;
  rep.pi_pi_x = nc_substitute(pi_prime.f, pi_prime);
  rep.pi_pi_y = nc_substitute(pi_prime.g, pi_prime);
  rep.retraction_idempotent = rep.pi_pi_x == pi_prime.f && rep.pi_pi_y == pi_prime.g;
  rep.components_commute = commute_check(rep.s_image, rep.t_image);

  rep.lead_f = phi.f.top_form();
  rep.lead_g = phi.g.top_form();
  rep.leading_forms_commute = commute_check(rep.lead_f, rep.lead_g);
  return rep;
}

NcCertificate random_nc_certificate(std::uint64_t seed, Field field, unsigned max_word, unsigned cap) {
  if (max_word < 1) throw std::invalid_argument("max_word must be at least 1");
  Rng rng(seed);
  const auto shape = seed % 3;
  const char lead = shape == 1 ? 'y' : 'x';
  const char must = shape == 1 ? 'x' : 'y';
  NcCertificate c{NcPoly::word(Word(1, lead), Rat(1), field, cap), UniPoly{}, UniPoly{}};
  const long extra = uniform_int(rng, 1, 3);
  for (long k = 0; k < extra; ++k) {
    Word w;
    do {
      w.clear();
      const long len = uniform_int(rng, 1, static_cast<long>(max_word));
      for (long l = 0; l < len; ++l) w.push_back(uniform_int(rng, 0, 1) == 0 ? 'x' : 'y');
    } while (w.find(must) == Word::npos);
    long coef = uniform_int(rng, -3, 2);
    if (coef >= 0) ++coef;
    c.r += NcPoly::word(w, field.from(Rat(coef)), field, cap);
  }
  if (shape == 1) {
    c.t = UniPoly::z();
  } else {
    Rat shift(0);
    if (shape == 2) shift = field.from(Rat(uniform_int(rng, -3, 3)));
    c.r += NcPoly::constant(shift, field, cap);
    c.s = UniPoly::z() - UniPoly::constant(shift);
  }
  return c;
}

}  // namespace retractlab
