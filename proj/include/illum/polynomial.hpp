#pragma once

#include <string>
#include <vector>

#include "illum/rational.hpp"

namespace illum {

/// Univariate polynomial with exact rational coefficients, indexed by power.
/// Invariant: coefficient list is empty (zero polynomial) or ends with a
/// nonzero leading coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial variable();
    static Polynomial monomial(Rational c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int power) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    Polynomial derivative() const;
    Polynomial derivative(int order) const;

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    struct DivMod {
        Polynomial quotient;
        Polynomial remainder;
    };
    /// Exact long division over Q. Throws std::invalid_argument on a zero
    /// divisor.
    DivMod divmod(const Polynomial& divisor) const;
    /// Quotient of an exact division; throws InternalError if the remainder
    /// is nonzero.
    Polynomial divide_exact(const Polynomial& divisor) const;

    Polynomial monic() const;
    /// Scales by a positive rational so coefficients are coprime integers.
    /// Sign pattern is preserved, which is what Sturm chains need.
    Polynomial primitive() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd over Q (gcd(p, 0) = monic p; gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct SquareFreeFactor {
    Polynomial factor;  // monic, square-free
    int multiplicity;   // >= 1
};

/// Yun's algorithm: p = lc * prod factor_i ^ multiplicity_i with the factors
/// monic, square-free and pairwise coprime. Constants decompose to {}.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

/// p with repeated roots stripped: p / gcd(p, p').
Polynomial square_free_part(const Polynomial& p);

}  // namespace illum
