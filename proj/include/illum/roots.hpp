#pragma once

#include <optional>
#include <vector>

#include "illum/polynomial.hpp"

namespace illum {

/// Certified bracket for one real root: lo == hi means the root is the exact
/// rational lo; otherwise the target polynomial has exactly one real root in
/// the open interval (lo, hi) and neither endpoint is a root.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
    double approx() const { return to_double(midpoint()); }
    bool contains(const Rational& x) const { return is_point() ? x == lo : (lo < x && x < hi); }

    static IsolatingInterval point(Rational r) { return {r, r}; }
};

/// Sturm chain of the square-free part of p; counts distinct real roots.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    /// Distinct real roots in (lo, hi]; nullopt endpoints mean -inf / +inf.
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

    const Polynomial& square_free() const { return chain_.front(); }

private:
    int variations_at(const Rational& x) const;
    int variations_at_infinity(int dir) const;  // dir = -1 or +1
    std::vector<Polynomial> chain_;
};

/// Distinct real roots of p in (lo, hi] (Sturm). Pre: p != 0.
int sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

/// Every real root r of p satisfies |r| < bound (Cauchy bound
/// 1 + max|a_k/a_n|). Pre: deg p >= 1.
Rational cauchy_root_bound(const Polynomial& p);

struct IsolatedRoot {
    IsolatingInterval interval;
    int multiplicity;   // multiplicity of the root in the input polynomial
    Polynomial factor;  // square-free factor; the root is simple in it and
                        // its sign changes across non-point intervals
};

/// Isolating intervals for all distinct real roots of p, sorted ascending,
/// pairwise disjoint, each annotated with its multiplicity in p. Rational
/// roots with small numerator/denominator divisors come back as exact
/// points. Pre: p != 0.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p);

/// Shrinks a sign-change bracket of a square-free polynomial until its width
/// is at most `width`. Point intervals pass through unchanged.
IsolatingInterval tighten_bracket(const Polynomial& square_free, IsolatingInterval iv,
                                  const Rational& width);

/// Shrinks iv (a certified bracket for a root of p) until its width is at
/// most `width`. Point intervals pass through unchanged.
IsolatingInterval tighten(const Polynomial& p, IsolatingInterval iv, const Rational& width);

/// Rational approximation within eps of the root of p isolated by iv
/// (bisection; the certificate is preserved throughout).
Rational refine_root(const Polynomial& p, const IsolatingInterval& iv, const Rational& eps);

}  // namespace illum
