#include "retractlab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace retractlab {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

long Degree::value() const {
  if (!value_) throw std::logic_error("degree of the zero polynomial has no integer value");
  return *value_;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

Rat pow(const Rat& r, unsigned e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  return out;
}

}  // namespace retractlab
