#ifndef SETOPT_LINALG_HPP
#define SETOPT_LINALG_HPP

#include <vector>

#include "setopt/numeric.hpp"

namespace setopt::linalg {

// Small dense exact linear algebra on row lists. Every row must share one dimension.

std::size_t rank(const std::vector<Vector>& rows);

/// Basis of {x : <r, x> = 0 for every row r}. `dim` is needed when rows is empty.
std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t dim);

/// Scales v by a positive factor so its coordinates are coprime integers.
Vector primitive(const Vector& v);

}  // namespace setopt::linalg

#endif  // SETOPT_LINALG_HPP
