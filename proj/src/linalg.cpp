#include "retractlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace retractlab {

std::optional<std::vector<Rat>> solve_exact(RatMatrix a, std::vector<Rat> rhs) {
  const std::size_t rows = a.size();
  if (rhs.size() != rows) throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    const Rat inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (a[r][k] != 0) a[i][k] -= factor * a[r][k];
      }
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rat> x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  // Clear denominators, then strip the factor z^k.
  mpz_class lcm = 1;
  for (const auto& c : u.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : u.coeffs()) ints.push_back(c.get_num() * (lcm / c.get_den()));
  std::vector<Rat> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (ints.size() - low > 1) {
    const std::vector<mpz_class> ps = positive_divisors(ints[low]);
    const std::vector<mpz_class> qs = positive_divisors(ints.back());
    UniPoly reduced(std::vector<Rat>(u.coeffs().begin() + static_cast<long>(low), u.coeffs().end()));
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int sign : {1, -1}) {
          Rat cand(p * sign, q);
          cand.canonicalize();
          if (reduced.evaluate(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace retractlab
