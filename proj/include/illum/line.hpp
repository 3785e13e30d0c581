#pragma once

#include <optional>

#include "illum/rational.hpp"

namespace illum {

/// Non-vertical line y = slope*x + intercept. Exact rational values ride
/// along when the line came off the exact path. Vertical lines are
/// represented separately where they can occur (theta/normal incidences).
struct Line {
    double slope = 0.0;
    double intercept = 0.0;
    std::optional<Rational> slope_exact;
    std::optional<Rational> intercept_exact;

    bool exact() const { return slope_exact.has_value() && intercept_exact.has_value(); }

    static Line from_exact(const Rational& m, const Rational& b) {
        return {to_double(m), to_double(b), m, b};
    }
    static Line from_double(double m, double b) { return {m, b, std::nullopt, std::nullopt}; }

    double operator()(double x) const { return slope * x + intercept; }
};

/// Equality test used when at least one side of the comparison is numeric.
bool lines_close(const Line& a, const Line& b, double rel_tol);

}  // namespace illum
