#include "illum/tangency_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace illum {

Polynomial tangent_value_poly(const Polynomial& f, const Rational& s, const Rational& t) {
    int n = f.degree();
    if (n < 2) throw std::invalid_argument("tangent_value_poly needs deg f >= 2");
    std::vector<Rational> h(n + 1);
    h[0] = f.coeff(0) + s * f.coeff(1) - t;
    for (int k = 1; k < n; ++k)
        h[k] = s * Rational(k + 1) * f.coeff(k + 1) - Rational(k - 1) * f.coeff(k);
    h[n] = -Rational(n - 1) * f.coeff(n);
    return Polynomial(std::move(h));
}

TailSigns tangent_value_tail_signs(const Polynomial& f) {
    int n = f.degree();
    if (n < 2) throw std::invalid_argument("tangent_value_tail_signs needs deg f >= 2");
    bool lead_positive = sign(f.leading()) > 0;
    if (n % 2 != 0) return {lead_positive, !lead_positive};
    return {!lead_positive, !lead_positive};
}

std::vector<IsolatingInterval> tangent_value_critical_points(const Polynomial& f,
                                                             const Rational& s) {
    if (f.degree() < 2) throw std::invalid_argument("tangent_value_critical_points needs deg f >= 2");
    Polynomial f2 = f.derivative(2);
    std::vector<IsolatingInterval> result;

    // Inflection abscissae: odd-multiplicity roots of f''.
    bool s_is_inflection = false;
    if (f2.degree() >= 1) {
        for (const auto& root : isolate_real_roots(f2)) {
            if (root.multiplicity % 2 == 0) continue;  // no sign change, not an inflection
            IsolatingInterval iv = root.interval;
            // The extremum at an inflection abscissa requires d != s; shrink
            // the bracket until s is excluded or the root collapses onto s.
            while (!iv.is_point() && iv.contains(s)) {
                Rational mid = iv.midpoint();
                if (root.factor(mid) == 0) {
                    iv = IsolatingInterval::point(mid);
                } else if (sign(root.factor(mid)) == sign(root.factor(iv.lo))) {
                    iv.lo = mid;
                } else {
                    iv.hi = mid;
                }
            }
            if (iv.is_point() && iv.lo == s) {
                s_is_inflection = true;
                continue;
            }
            result.push_back(iv);
        }
    }
    if (!s_is_inflection) result.push_back(IsolatingInterval::point(s));

    std::sort(result.begin(), result.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    return result;
}

bool is_nonnegative_on_reals(const Polynomial& p) {
    if (p.is_zero()) return true;
    if (p.degree() == 0) return p.coeff(0) >= 0;
    if (p.degree() % 2 != 0 || sign(p.leading()) < 0) return false;
    // Nonnegative iff every real root has even multiplicity.
    for (const auto& sq : square_free_decomposition(p)) {
        if (sq.multiplicity % 2 == 0) continue;
        if (sq.factor.degree() >= 1 && sturm_count(sq.factor, std::nullopt, std::nullopt) > 0)
            return false;
    }
    return true;
}

ConvexityCheck is_convex(const Polynomial& f) {
    Polynomial f2 = f.derivative(2);
    if (f2.is_zero()) return {true, "second derivative is identically zero"};
    if (f2.degree() == 0)
        return f2.coeff(0) > 0 ? ConvexityCheck{true, "second derivative is a positive constant"}
                               : ConvexityCheck{false, "second derivative is a negative constant"};
    if (f2.degree() % 2 != 0)
        return {false, "second derivative has odd degree"};
    if (sign(f2.leading()) < 0)
        return {false, "second derivative has negative leading coefficient"};
    for (const auto& sq : square_free_decomposition(f2)) {
        if (sq.multiplicity % 2 == 0) continue;
        if (sq.factor.degree() >= 1 && sturm_count(sq.factor, std::nullopt, std::nullopt) > 0)
            return {false, "second derivative changes sign (odd-multiplicity real root)"};
    }
    return {true, "second derivative is nonnegative on the whole line"};
}

Line tangent_line_at(const Polynomial& f, const Rational& c) {
    Polynomial fp = f.derivative();
    Rational slope = fp(c);
    Rational intercept = f(c) - c * slope;
    return Line::from_exact(slope, intercept);
}

}  // namespace illum
