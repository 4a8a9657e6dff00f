// Determinants of polynomial matrices and Sylvester resultants.
#pragma once

#include "inflect/poly.hpp"

#include <string_view>
#include <vector>

namespace inflect {

using PolyMatrix = std::vector<std::vector<SparsePoly>>;

/// Exact determinant by fraction-free (Bareiss) elimination with exact
/// polynomial division. All entries must share one variable tuple.
SparsePoly det_polymatrix(const PolyMatrix& m);

/// Sylvester resultant of a and b with respect to `var`, returned over the
/// remaining variables.
///
/// Convention: with m = deg a and n = deg b in var, the Sylvester matrix has
/// n rows of a's coefficients followed by m rows of b's coefficients, each
/// row listing coefficients from the highest power down and shifted one
/// column right per row. So res(x - a, x - b) = a - b. If one operand does
/// not involve var the result is the other's power (b0^m or a0^n); a zero
/// operand gives 0. Both operands zero is an error.
SparsePoly resultant(const SparsePoly& a, const SparsePoly& b, std::string_view var);

}  // namespace inflect
