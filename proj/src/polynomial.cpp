#include "illum/polynomial.hpp"

#include <stdexcept>
#include <utility>

#include "illum/errors.hpp"

namespace illum {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(Rational c, int power) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, Rational(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Rational& Polynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[power];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    DivMod result;
    result.remainder = *this;
    int dd = divisor.degree();
    if (degree() < dd) return result;
    std::vector<Rational> q(degree() - dd + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!result.remainder.is_zero() && result.remainder.degree() >= dd) {
        int k = result.remainder.degree() - dd;
        Rational factor = result.remainder.leading() / lead;
        q[k] = factor;
        // remainder -= factor * x^k * divisor
        auto& rc = result.remainder.coeffs_;
        for (int i = 0; i <= dd; ++i) rc[k + i] -= factor * divisor.coeffs_[i];
        result.remainder.normalize();
    }
    result.quotient = Polynomial(std::move(q));
    return result;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    DivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero()) throw InternalError("inexact polynomial division");
    return std::move(dm.quotient);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    const Rational lead = r.leading();
    for (auto& c : r.coeffs_) c /= lead;
    return r;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Integer den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Integer num_gcd(0);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);  // positive by construction
    scale.canonicalize();
    Polynomial r = *this;
    r *= scale;
    return r;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c > 0 ? c : Rational(-c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && k > 0;
        if (!unit) out += illum::to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).remainder;
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive();  // keep coefficient growth down
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
    std::vector<SquareFreeFactor> result;
    if (p.degree() <= 0) return result;
    // Yun's algorithm.
    Polynomial dp = p.derivative();
    Polynomial a = gcd(p, dp);
    Polynomial b = p.divide_exact(a);
    Polynomial c = dp.divide_exact(a);
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        Polynomial ai = gcd(b, d);
        if (ai.degree() >= 1) result.push_back({ai, i});
        b = b.divide_exact(ai);
        c = d.divide_exact(ai);
        d = c - b.derivative();
        ++i;
    }
    return result;
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    return p.divide_exact(gcd(p, p.derivative()));
}

}  // namespace illum
