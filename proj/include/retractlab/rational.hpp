#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace retractlab {

/// Exact rational. GMP keeps mpq_class values canonical (lowest terms,
/// positive denominator) as long as every hand-built value goes through
/// make_rat or canonicalize().
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "a" or "a/b" with optional leading sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat pow(const Rat& r, unsigned e);

/// Polynomial degree with a distinguished value for the zero polynomial that
/// compares below every integer.
class Degree {
 public:
  constexpr Degree() = default;  // minus infinity
  constexpr Degree(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree neg_inf() { return Degree{}; }

  constexpr bool is_neg_inf() const { return !value_.has_value(); }
  /// Throws std::logic_error for minus infinity.
  long value() const;
  /// Value, or `fallback` for minus infinity.
  constexpr long value_or(long fallback) const { return value_.value_or(fallback); }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) {
      return !a.is_neg_inf() <=> !b.is_neg_inf();
    }
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const;

 private:
  std::optional<long> value_;
};

}  // namespace retractlab
