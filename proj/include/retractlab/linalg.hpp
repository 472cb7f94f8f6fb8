#pragma once

#include <optional>
#include <vector>

#include "retractlab/rational.hpp"
#include "retractlab/unipoly.hpp"

namespace retractlab {

/// Row-major dense matrix over the rationals.
using RatMatrix = std::vector<std::vector<Rat>>;

/// A particular solution of a x = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent. Exact Gauss-Jordan elimination.
std::optional<std::vector<Rat>> solve_exact(RatMatrix a, std::vector<Rat> rhs);

/// Distinct rational roots of u, ascending. u must be nonzero.
std::vector<Rat> rational_roots(const UniPoly& u);

}  // namespace retractlab
