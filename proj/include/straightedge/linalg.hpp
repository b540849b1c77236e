#pragma once

// Exact dense linear algebra over the rationals: fraction-free elimination.

#include <vector>

#include "straightedge/scalar.hpp"

namespace straightedge {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Determinant by Bareiss elimination on the row-scaled integer matrix.
Rational determinant(const RationalMatrix& m);

/// Basis of the right nullspace, one primitive integer vector per free column.
/// Pivot choice is the first nonzero entry in column order.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Scales v to a primitive integer vector whose first nonzero entry is positive.
RationalVector primitive(const RationalVector& v);

}  // namespace straightedge
