#include "illum/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "illum/errors.hpp"

namespace illum {

namespace {

int sign_at_infinity(const Polynomial& p, int dir) {
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    if (dir < 0 && p.degree() % 2 != 0) s = -s;
    return s;
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    Polynomial sf = square_free_part(p).primitive();
    chain_.push_back(sf);
    if (sf.degree() >= 1) {
        chain_.push_back(sf.derivative().primitive());
        while (chain_.back().degree() >= 1) {
            Polynomial rem = chain_[chain_.size() - 2].divmod(chain_.back()).remainder;
            if (rem.is_zero()) break;  // cannot happen for a square-free head; guards degenerate input
            chain_.push_back((-rem).primitive());
        }
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign(p(x)));
    return count_variations(signs);
}

int SturmSequence::variations_at_infinity(int dir) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign_at_infinity(p, dir));
    return count_variations(signs);
}

int SturmSequence::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    if (chain_.front().degree() < 1) return 0;
    // With zeros skipped the variation count is right-continuous, so the
    // difference counts roots in the half-open interval (lo, hi].
    int vlo = lo ? variations_at(*lo) : variations_at_infinity(-1);
    int vhi = hi ? variations_at(*hi) : variations_at_infinity(+1);
    return vlo - vhi;
}

int sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
    return SturmSequence(p).count(lo, hi);
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("root bound needs degree >= 1");
    Rational max_ratio(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio = abs(p.coeff(k) / p.leading());
        if (ratio > max_ratio) max_ratio = ratio;
    }
    return 1 + max_ratio;
}

namespace {

constexpr unsigned long kDivisorTrialCap = 100000000UL;  // 1e8
constexpr std::size_t kMaxDivisors = 128;
constexpr std::size_t kMaxCandidatePairs = 4096;

// Positive divisors of |n|, or nullopt when |n| is too large to factor by
// trial division (rational-root detection is then skipped; roots simply stay
// as isolating intervals).
std::optional<std::vector<Integer>> small_divisors(const Integer& n_in) {
    Integer n = abs(n_in);
    if (n == 0 || !n.fits_ulong_p() || n.get_ui() > kDivisorTrialCap) return std::nullopt;
    unsigned long v = n.get_ui();
    std::vector<Integer> divs;
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        divs.emplace_back(d);
        if (d != v / d) divs.emplace_back(v / d);
        if (divs.size() > kMaxDivisors) return std::nullopt;
    }
    return divs;
}

// Finds and deflates exact rational roots of a square-free g (small
// coefficient divisors only).
std::vector<Rational> extract_rational_roots(Polynomial& g) {
    std::vector<Rational> roots;
    if (g.degree() >= 1 && g.coeff(0) == 0) {
        roots.emplace_back(0);
        g = g.divide_exact(Polynomial::variable());
    }
    if (g.degree() < 1) return roots;
    Polynomial gi = g.primitive();
    auto trailing = small_divisors(gi.coeff(0).get_num());
    auto leading = small_divisors(gi.leading().get_num());
    if (!trailing || !leading) return roots;
    if (trailing->size() * leading->size() > kMaxCandidatePairs) return roots;
    std::set<Rational> candidates;
    for (const Integer& p : *trailing) {
        for (const Integer& q : *leading) {
            Rational c(p, q);
            c.canonicalize();
            candidates.insert(c);
            candidates.insert(-c);
        }
    }
    for (const Rational& c : candidates) {
        if (g.degree() < 1) break;
        if (g(c) == 0) {
            roots.push_back(c);
            g = g.divide_exact(Polynomial(std::vector<Rational>{-c, Rational(1)}));
        }
    }
    return roots;
}

// One bisection step on a sign-change bracket of a square-free polynomial.
// Returns true if the interval collapsed to an exact point.
bool bisect_step(const Polynomial& sf, IsolatingInterval& iv) {
    Rational mid = iv.midpoint();
    int sm = sign(sf(mid));
    if (sm == 0) {
        iv = IsolatingInterval::point(mid);
        return true;
    }
    if (sm == sign(sf(iv.lo)))
        iv.lo = mid;
    else
        iv.hi = mid;
    return false;
}

// Sturm bisection on a square-free g; endpoints of emitted intervals are
// never roots.
void isolate_square_free(const Polynomial& g, std::vector<IsolatingInterval>& out) {
    if (g.degree() < 1) return;
    SturmSequence seq(g);
    Rational bound = cauchy_root_bound(g);
    struct Span {
        Rational lo, hi;
        int count;
    };
    std::vector<Span> stack;
    int total = seq.count(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Span span = std::move(stack.back());
        stack.pop_back();
        if (span.count == 1) {
            out.push_back({span.lo, span.hi});
            continue;
        }
        Rational mid = (span.lo + span.hi) / 2;
        if (g(mid) == 0) {
            out.push_back(IsolatingInterval::point(mid));
            // Carve out a root-free neighborhood of mid so the sub-spans keep
            // non-root endpoints.
            Rational w = (span.hi - span.lo) / 16;
            Rational lo_edge = mid - w, hi_edge = mid + w;
            while (g(lo_edge) == 0 || g(hi_edge) == 0 || seq.count(lo_edge, hi_edge) != 1) {
                w /= 2;
                lo_edge = mid - w;
                hi_edge = mid + w;
            }
            int left = seq.count(span.lo, lo_edge);
            int right = seq.count(hi_edge, span.hi);
            if (left > 0) stack.push_back({span.lo, lo_edge, left});
            if (right > 0) stack.push_back({hi_edge, span.hi, right});
        } else {
            int left = seq.count(span.lo, mid);
            int right = span.count - left;
            if (left > 0) stack.push_back({span.lo, mid, left});
            if (right > 0) stack.push_back({mid, span.hi, right});
        }
    }
}

bool disjoint(const IsolatingInterval& a, const IsolatingInterval& b) {
    if (a.is_point() && b.is_point()) return a.lo != b.lo;
    return a.hi <= b.lo || b.hi <= a.lo;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    std::vector<IsolatedRoot> work;
    for (const auto& sq : square_free_decomposition(p)) {
        Polynomial g = sq.factor;
        for (const Rational& r : extract_rational_roots(g))
            work.push_back({IsolatingInterval::point(r), sq.multiplicity,
                            Polynomial(std::vector<Rational>{-r, Rational(1)})});
        std::vector<IsolatingInterval> ivs;
        isolate_square_free(g, ivs);
        for (auto& iv : ivs) work.push_back({std::move(iv), sq.multiplicity, g});
    }
    // Distinct factors are coprime, so all roots are distinct; shrink any
    // overlapping brackets until the whole set is pairwise disjoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            for (std::size_t j = i + 1; j < work.size(); ++j) {
                while (!disjoint(work[i].interval, work[j].interval)) {
                    changed = true;
                    IsolatedRoot& wider =
                        work[i].interval.width() >= work[j].interval.width() ? work[i] : work[j];
                    if (wider.interval.is_point()) {
                        IsolatedRoot& other = &wider == &work[i] ? work[j] : work[i];
                        bisect_step(other.factor, other.interval);
                    } else {
                        bisect_step(wider.factor, wider.interval);
                    }
                }
            }
        }
    }
    std::vector<IsolatedRoot> result = std::move(work);
    std::sort(result.begin(), result.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.interval.lo < b.interval.lo ||
               (a.interval.lo == b.interval.lo && a.interval.hi < b.interval.hi);
    });
    return result;
}

IsolatingInterval tighten_bracket(const Polynomial& square_free, IsolatingInterval iv,
                                  const Rational& width) {
    while (!iv.is_point() && iv.width() > width) {
        if (bisect_step(square_free, iv)) break;
    }
    return iv;
}

IsolatingInterval tighten(const Polynomial& p, IsolatingInterval iv, const Rational& width) {
    if (iv.is_point()) return iv;
    Polynomial sf = square_free_part(p);
    if (sf(iv.lo) == 0 || sf(iv.hi) == 0)
        throw std::invalid_argument("isolating interval endpoints must not be roots");
    return tighten_bracket(sf, std::move(iv), width);
}

Rational refine_root(const Polynomial& p, const IsolatingInterval& iv, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("refine_root needs eps > 0");
    IsolatingInterval t = tighten(p, iv, eps);
    return t.is_point() ? t.lo : t.midpoint();
}

}  // namespace illum
