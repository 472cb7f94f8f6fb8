#include "retractlab/unipoly.hpp"

#include <stdexcept>

#include "term_format.hpp"

namespace retractlab {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::z() { return monomial(1); }

UniPoly UniPoly::monomial(std::size_t k, const Rat& c) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

Degree UniPoly::deg() const {
  if (coeffs_.empty()) return Degree::neg_inf();
  return static_cast<long>(coeffs_.size() - 1);
}

const Rat& UniPoly::leading_coeff() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rat tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(Rat(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= q;
    result += constant(*it);
  }
  return result;
}

Rat UniPoly::evaluate(const Rat& v) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  detail::TermWriter w;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    std::string mono;
    if (k == 1) {
      mono = "z";
    } else if (k > 1) {
      mono = "z^" + std::to_string(k);
    }
    w.add(coeffs_[k], mono);
  }
  return w.str();
}

}  // namespace retractlab
