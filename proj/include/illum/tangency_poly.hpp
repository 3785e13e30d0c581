#pragma once

#include <string>
#include <vector>

#include "illum/line.hpp"
#include "illum/polynomial.hpp"
#include "illum/roots.hpp"

namespace illum {

/// The polynomial h(c) = f(c) + (s - c) f'(c) - t whose roots are the
/// abscissae of tangent lines to f passing through (s, t). For deg f = n >= 2
/// the leading coefficient is -(n-1) a_n, so deg h = n always.
/// Throws std::invalid_argument for deg f < 2.
Polynomial tangent_value_poly(const Polynomial& f, const Rational& s, const Rational& t);

struct TailSigns {
    bool left_positive;   // limit of the tangent-value function as c -> -inf
    bool right_positive;  // limit as c -> +inf
};

/// Signs of the two infinite limits of c -> f(c) + (s - c) f'(c), read off
/// the leading coefficient: odd degree diverges with opposite signs
/// (sgn(a_n), -sgn(a_n)); even degree with (-sgn(a_n), -sgn(a_n)).
/// Pre: deg f >= 2.
TailSigns tangent_value_tail_signs(const Polynomial& f);

/// Isolating intervals for the local-extremum abscissae of the tangent-value
/// function c -> f(c) + (s - c) f'(c): c = s when (s, f(s)) is not an
/// inflection point of f, plus every inflection abscissa d != s. Inflection
/// abscissae are the sign-change (odd multiplicity) roots of f''.
/// Pre: deg f >= 2. Sorted ascending.
std::vector<IsolatingInterval> tangent_value_critical_points(const Polynomial& f,
                                                             const Rational& s);

struct ConvexityCheck {
    bool convex;
    std::string detail;
};

/// Exact test for p(x) >= 0 on all of R: nonnegative leading behavior and no
/// odd-multiplicity real roots.
bool is_nonnegative_on_reals(const Polynomial& p);

/// Exact convexity certificate: f'' >= 0 on all of R.
ConvexityCheck is_convex(const Polynomial& f);

/// Tangent line of f at abscissa c (exact).
Line tangent_line_at(const Polynomial& f, const Rational& c);

}  // namespace illum
