#pragma once

#include <vector>

#include "illum/line.hpp"
#include "illum/polynomial.hpp"
#include "illum/roots.hpp"

namespace illum {

/// One line tangent to the graph at two or more distinct abscissae. The
/// tangency list is sorted ascending and has length >= 2.
struct BitangentRecord {
    Line line;
    std::vector<IsolatingInterval> tangencies;
};

/// All multiple tangent lines of a polynomial graph. Degree <= 3 has none
/// (convexity argument for degree 2, the cubic case is root structure).
/// Found by eliminating y from
///   { f'(x) = f'(y),  f(x) - x f'(x) = f(y) - y f'(y),  x != y }
/// with the diagonal factor (x - y) divided out of both equations before the
/// resultant. Throws InternalError if the elimination degenerates.
std::vector<BitangentRecord> multiple_tangent_lines(const Polynomial& f);

/// Resultant with respect to y of two polynomials in y with coefficients in
/// Q[x] (coefficient vectors indexed by y-power). Computed from the Sylvester
/// matrix by fraction-free elimination.
Polynomial resultant_y(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

}  // namespace illum
