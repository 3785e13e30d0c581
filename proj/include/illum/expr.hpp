#pragma once

#include <memory>
#include <optional>
#include <string>

#include "illum/polynomial.hpp"
#include "illum/rational.hpp"

namespace illum {

enum class ExprKind { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Exp, Atan };

/// Immutable expression tree over one variable. Construction goes through
/// the static factories, which fold constants and drop additive/multiplicative
/// identities but never rewrite anything that could change the function's
/// domain (0/u, u^0 and friends stay as written).
class Expr {
public:
    Expr();  // the constant 0

    static Expr constant(Rational value);
    static Expr variable();
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr div(Expr a, Expr b);
    static Expr pow(Expr base, int exponent);  // exponent >= 0
    static Expr neg(Expr a);
    static Expr exp(Expr a);
    static Expr atan(Expr a);

    ExprKind kind() const;
    const Rational& constant_value() const;  // pre: kind() == Constant
    int exponent() const;                    // pre: kind() == Pow
    Expr child(int i = 0) const;             // 0 = left/only child, 1 = right

    bool is_constant(const Rational& v) const;

    /// Throws DomainError on division by zero; overflow propagates as +-inf.
    double evaluate(double x) const;

    Expr differentiate() const;

    std::string to_string() const;

    /// Exact coefficients if the expression expands to a polynomial over Q
    /// (division only by constants); nullopt otherwise.
    std::optional<Polynomial> as_polynomial() const;

    /// Value of a constant (x-free) subtree, nullopt if it contains x, a
    /// division by zero, or a transcendental value.
    std::optional<Rational> fold_constant() const;

    struct Node;  // implementation detail, defined in expr.cpp

private:
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Parses a formula over x with +, -, *, /, ^ (non-negative integer
/// exponents), exp(.), atan(.), parentheses and exact decimal/rational
/// literals. Throws ParseError with the offending position.
Expr parse_expression(const std::string& text);

Expr polynomial_to_expr(const Polynomial& p);

/// Combined numerator/denominator of an expression built from rational
/// operations; no gcd cancellation, so poles of the written form are
/// preserved. nullopt if the expression contains exp/atan of x or a division
/// by the zero polynomial.
struct RationalForm {
    Polynomial num;
    Polynomial den;
};
std::optional<RationalForm> as_rational_form(const Expr& e);

/// Flat evaluator for hot loops; same domain semantics as Expr::evaluate.
class CompiledExpr {
public:
    CompiledExpr();  // the constant 0
    explicit CompiledExpr(const Expr& e);
    double operator()(double x) const;

private:
    enum class Op : unsigned char { Const, X, Add, Sub, Mul, Div, Pow, Neg, Exp, Atan };
    struct Instr {
        Op op;
        int arg;
        double value;
    };
    std::vector<Instr> program_;
    std::size_t stack_need_;
};

}  // namespace illum
