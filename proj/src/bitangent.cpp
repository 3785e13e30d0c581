#include "illum/bitangent.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "illum/errors.hpp"

namespace illum {

namespace {

using BivarPoly = std::vector<Polynomial>;  // coefficient of y^j is a Polynomial in x

int degree_y(const BivarPoly& p) {
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
        if (!p[j].is_zero()) return j;
    return -1;
}

// (u(x) - u(y)) / (x - y) for u = sum u_k t^k, using
// (x^k - y^k)/(x - y) = sum_{i+j=k-1} x^i y^j.
BivarPoly difference_quotient(const Polynomial& u) {
    int n = u.degree();
    BivarPoly out(std::max(n, 1), Polynomial());
    for (int k = 1; k <= n; ++k) {
        const Rational& uk = u.coeff(k);
        if (uk == 0) continue;
        for (int j = 0; j <= k - 1; ++j) out[j] += Polynomial::monomial(uk, k - 1 - j);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace

Polynomial resultant_y(const BivarPoly& a, const BivarPoly& b) {
    int da = degree_y(a), db = degree_y(b);
    if (da < 0 || db < 0) throw std::invalid_argument("resultant of a zero polynomial");
    if (da == 0 && db == 0) return Polynomial::constant(Rational(1));
    int n = da + db;
    // Sylvester matrix, rows of a-coefficients then b-coefficients.
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial()));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[r][r + j] = a[da - j];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j];
    // Bareiss fraction-free elimination; all divisions are exact in Q[x].
    Polynomial prev = Polynomial::constant(Rational(1));
    int det_sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Polynomial();  // determinant is identically zero
            std::swap(m[k], m[pivot]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial result = m[n - 1][n - 1];
    if (det_sign < 0) result = -result;
    return result;
}

namespace {

struct Candidate {
    IsolatingInterval interval;
    Polynomial factor;
    bool rational;
    Rational exact;      // valid when rational
    Rational approx;     // tight rational approximation otherwise
    Rational slope;      // f'(value) at exact/approx point
    Rational intercept;  // f(value) - value * f'(value) at exact/approx point
};

bool nearly_equal(const Rational& a, const Rational& b, double tol) {
    double ad = to_double(a), bd = to_double(b);
    return std::abs(ad - bd) <= tol * (1.0 + std::max(std::abs(ad), std::abs(bd)));
}

}  // namespace

std::vector<BitangentRecord> multiple_tangent_lines(const Polynomial& f) {
    std::vector<BitangentRecord> records;
    if (f.degree() <= 3) return records;

    Polynomial fp = f.derivative();
    Polynomial intercepts = f - Polynomial::variable() * fp;  // c -> intercept of the tangent at c
    BivarPoly slope_eq = difference_quotient(fp);
    BivarPoly intercept_eq = difference_quotient(intercepts);

    Polynomial r = resultant_y(slope_eq, intercept_eq);
    if (r.is_zero()) throw InternalError("bitangent elimination degenerated (zero resultant)");
    if (r.degree() < 1) return records;

    // Tangency abscissae of any multiple tangent line appear among the real
    // roots of r (alongside spurious roots: complex partners and inflection
    // diagonal solutions). Group by tangent line; groups of size one are the
    // spurious ones.
    const Rational tight(Integer(1), Integer("1000000000000000000000000"));  // 1e-24
    std::vector<Candidate> candidates;
    for (const auto& root : isolate_real_roots(r)) {
        Candidate c;
        c.interval = root.interval;
        c.factor = root.factor;
        c.rational = root.interval.is_point();
        if (c.rational) {
            c.exact = root.interval.lo;
            c.approx = c.exact;
        } else {
            c.interval = tighten_bracket(root.factor, c.interval, tight);
            if (c.interval.is_point()) {
                c.rational = true;
                c.exact = c.interval.lo;
                c.approx = c.exact;
            } else {
                c.approx = c.interval.midpoint();
            }
        }
        c.slope = fp(c.approx);
        c.intercept = intercepts(c.approx);
        candidates.push_back(std::move(c));
    }

    std::vector<bool> used(candidates.size(), false);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> group{i};
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (used[j]) continue;
            bool same;
            if (candidates[i].rational && candidates[j].rational) {
                same = candidates[i].slope == candidates[j].slope &&
                       candidates[i].intercept == candidates[j].intercept;
            } else {
                same = nearly_equal(candidates[i].slope, candidates[j].slope, 1e-12) &&
                       nearly_equal(candidates[i].intercept, candidates[j].intercept, 1e-12);
            }
            if (same) group.push_back(j);
        }
        if (group.size() < 2) continue;
        for (std::size_t g : group) used[g] = true;

        BitangentRecord rec;
        const Candidate* exact_rep = nullptr;
        for (std::size_t g : group)
            if (candidates[g].rational) {
                exact_rep = &candidates[g];
                break;
            }
        if (exact_rep)
            rec.line = Line::from_exact(exact_rep->slope, exact_rep->intercept);
        else
            rec.line = Line::from_double(to_double(candidates[group[0]].slope),
                                         to_double(candidates[group[0]].intercept));
        for (std::size_t g : group) rec.tangencies.push_back(candidates[g].interval);
        std::sort(rec.tangencies.begin(), rec.tangencies.end(),
                  [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace illum
