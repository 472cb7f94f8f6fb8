#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "retractlab/poly2.hpp"
#include "retractlab/unipoly.hpp"

namespace retractlab {

class NcPoly;
struct Field;

/// Syntax or semantic error in a polynomial expression. line and column are
/// 1-based and point at the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Largest exponent literal accepted after '^'.
inline constexpr unsigned kMaxExponent = 100000;

// Grammar shared by all modes:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' INT)?
//   atom  := INT ('/' INT)? | IDENT | '(' expr ')'
// Commutative identifiers are the single letters x, y. The univariate mode
// accepts only z. Noncommutative identifiers are words over {x, y}, read
// left to right as a product.

Poly2 parse_poly2(std::string_view text);
UniPoly parse_unipoly(std::string_view text);
NcPoly parse_ncpoly(std::string_view text, const Field& field);

}  // namespace retractlab
