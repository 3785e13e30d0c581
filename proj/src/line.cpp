#include "illum/line.hpp"

#include <cmath>

namespace illum {

bool lines_close(const Line& a, const Line& b, double rel_tol) {
    if (a.exact() && b.exact())
        return *a.slope_exact == *b.slope_exact && *a.intercept_exact == *b.intercept_exact;
    return std::abs(a.slope - b.slope) <= rel_tol * (1.0 + std::abs(a.slope)) &&
           std::abs(a.intercept - b.intercept) <= rel_tol * (1.0 + std::abs(a.intercept));
}

}  // namespace illum
