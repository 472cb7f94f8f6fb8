#pragma once

#include <string>

#include "retractlab/rational.hpp"

namespace retractlab::detail {

// Accumulates "c*m" terms into the canonical "a - b + c" text form. An empty
// monomial string stands for the constant 1.
class TermWriter {
 public:
  void add(const Rat& c, const std::string& monomial) {
    if (c == 0) return;
    bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (out_.empty()) {
      if (negative) out_ += "-";
    } else {
      out_ += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
      out_ += retractlab::to_string(mag);
    } else if (mag == 1) {
      out_ += monomial;
    } else {
      out_ += retractlab::to_string(mag) + "*" + monomial;
    }
  }

  std::string str() const { return out_.empty() ? std::string("0") : out_; }

 private:
  std::string out_;
};

}  // namespace retractlab::detail
