#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "illum/errors.hpp"
#include "illum/expr.hpp"

using namespace illum;

namespace {

std::mt19937 rng(987654);

Expr random_expr(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> num(-6, 6);
            std::uniform_int_distribution<int> den(1, 3);
            Rational r(num(rng), den(rng));
            r.canonicalize();
            return Expr::constant(r);
        }
        case 1: return Expr::variable();
        case 2: return Expr::add(random_expr(depth - 1), random_expr(depth - 1));
        case 3: return Expr::sub(random_expr(depth - 1), random_expr(depth - 1));
        case 4: return Expr::mul(random_expr(depth - 1), random_expr(depth - 1));
        case 5: return Expr::div(random_expr(depth - 1), random_expr(depth - 1));
        case 6: {
            std::uniform_int_distribution<int> e(0, 4);
            return Expr::pow(random_expr(depth - 1), e(rng));
        }
        case 7: return Expr::neg(random_expr(depth - 1));
        case 8: return Expr::exp(random_expr(depth - 1));
        default: return Expr::atan(random_expr(depth - 1));
    }
}

Expr random_poly_expr(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> num(-6, 6);
            return Expr::constant(Rational(num(rng)));
        }
        case 1: return Expr::variable();
        case 2: return Expr::add(random_poly_expr(depth - 1), random_poly_expr(depth - 1));
        case 3: return Expr::sub(random_poly_expr(depth - 1), random_poly_expr(depth - 1));
        case 4: return Expr::mul(random_poly_expr(depth - 1), random_poly_expr(depth - 1));
        case 5: return Expr::neg(random_poly_expr(depth - 1));
        default: {
            std::uniform_int_distribution<int> e(0, 3);
            return Expr::pow(random_poly_expr(depth - 1), e(rng));
        }
    }
}

}  // namespace

TEST_CASE("parse shapes") {
    Expr e = parse_expression("x*atan(x)");
    REQUIRE(e.kind() == ExprKind::Mul);
    CHECK(e.child(0).kind() == ExprKind::Variable);
    CHECK(e.child(1).kind() == ExprKind::Atan);
    CHECK(e.child(1).child(0).kind() == ExprKind::Variable);

    Expr ex = parse_expression("exp(x)");
    REQUIRE(ex.kind() == ExprKind::Exp);
    CHECK(ex.child(0).kind() == ExprKind::Variable);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expression("x^");
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.position() == 2);
    }
    CHECK_THROWS_AS(parse_expression("sin(x)"), ParseError);
    CHECK_THROWS_AS(parse_expression("x^(-2)"), ParseError);
    CHECK_THROWS_AS(parse_expression("x^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_expression("x^x"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("(x"), ParseError);
    CHECK_THROWS_AS(parse_expression("x +"), ParseError);
    CHECK_THROWS_AS(parse_expression("2 $ 3"), ParseError);
}

TEST_CASE("precedence and associativity") {
    // ^ binds tighter than unary minus: -x^2 evaluates to -(x^2)
    CHECK(parse_expression("-x^2").evaluate(3.0) == doctest::Approx(-9.0));
    // right-associative exponent tower folds to an integer
    CHECK(parse_expression("x^2^3").evaluate(2.0) == doctest::Approx(256.0));
    CHECK(parse_expression("2*x+1").evaluate(5.0) == doctest::Approx(11.0));
    CHECK(parse_expression("2*(x+1)").evaluate(5.0) == doctest::Approx(12.0));
    CHECK(parse_expression("1 - 2 - 3").evaluate(0.0) == doctest::Approx(-4.0));
    CHECK(parse_expression("8/4/2").evaluate(0.0) == doctest::Approx(1.0));
}

TEST_CASE("decimal literals are exact rationals") {
    Expr half = parse_expression("0.5");
    REQUIRE(half.kind() == ExprKind::Constant);
    CHECK(half.constant_value() == Rational(1, 2));
    Expr v = parse_expression("1.25*x");
    auto p = v.as_polynomial();
    REQUIRE(p.has_value());
    CHECK(p->coeff(1) == Rational(5, 4));
}

TEST_CASE("evaluate") {
    CHECK(parse_expression("x*atan(x)").evaluate(0.0) == doctest::Approx(0.0));
    CHECK(parse_expression("exp(x)").evaluate(0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_expression("1/x").evaluate(0.0), DomainError);
    CHECK(parse_expression("x*atan(x)").evaluate(1.0) == doctest::Approx(std::atan(1.0)));
}

TEST_CASE("differentiate fixtures") {
    // d/dx (x atan x) = atan x + x/(1+x^2), checked pointwise
    Expr d = parse_expression("x*atan(x)").differentiate();
    for (double x : {-2.0, -0.5, 0.0, 0.3, 1.7}) {
        double expected = std::atan(x) + x / (1 + x * x);
        CHECK(d.evaluate(x) == doctest::Approx(expected).epsilon(1e-12));
    }
    // d/dx exp(x) = exp(x)
    Expr de = parse_expression("exp(x)").differentiate();
    CHECK(de.evaluate(1.0) == doctest::Approx(std::exp(1.0)));

    // second derivative of x atan x evaluates to 2/(1+x^2)^2
    Expr d2 = d.differentiate();
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
        double expected = 2.0 / std::pow(1 + x * x, 2);
        CHECK(d2.evaluate(x) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("derivative matches central finite differences") {
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        Expr e = random_expr(3);
        Expr d = e.differentiate();
        std::uniform_real_distribution<double> xs(-2.0, 2.0);
        for (int i = 0; i < 50; ++i) {
            double x = xs(rng);
            double h = 1e-6;
            double symbolic, fd;
            try {
                symbolic = d.evaluate(x);
                fd = (e.evaluate(x + h) - e.evaluate(x - h)) / (2 * h);
            } catch (const DomainError&) {
                continue;  // sampled a pole
            }
            if (!std::isfinite(symbolic) || !std::isfinite(fd)) continue;
            if (std::abs(symbolic) > 1e3) continue;  // FD truncation noise dominates
            CHECK(std::abs(symbolic - fd) <= 1e-4 * (1.0 + std::abs(symbolic)));
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("polynomial recognition") {
    auto p = parse_expression("x^3").as_polynomial();
    REQUIRE(p.has_value());
    CHECK(p->coeffs() == std::vector<Rational>{0, 0, 0, 1});

    p = parse_expression("x^4 - 2*x^2").as_polynomial();
    REQUIRE(p.has_value());
    CHECK(p->coeffs() == std::vector<Rational>{0, 0, -2, 0, 1});

    CHECK_FALSE(parse_expression("x*atan(x)").as_polynomial().has_value());
    CHECK_FALSE(parse_expression("1/x").as_polynomial().has_value());
    CHECK(parse_expression("(x^2+2)/2").as_polynomial().has_value());

    // expansion oracle: multiply out (x-1)^2 (x+2) by hand
    p = parse_expression("(x-1)^2*(x+2)").as_polynomial();
    REQUIRE(p.has_value());
    CHECK(p->coeffs() == std::vector<Rational>{2, -3, 0, 1});
}

TEST_CASE("rational form keeps poles") {
    auto rf = as_rational_form(parse_expression("(x^2+x)/x"));
    REQUIRE(rf.has_value());
    CHECK(rf->den.degree() == 1);  // pole at 0 not cancelled
    CHECK_FALSE(as_rational_form(parse_expression("exp(x)")).has_value());
    auto combined = as_rational_form(parse_expression("1/(x^2+1) + x"));
    REQUIRE(combined.has_value());
    // num/den evaluate consistently
    for (double x : {-1.5, 0.0, 2.0}) {
        double expected = 1.0 / (x * x + 1) + x;
        CHECK(combined->num.eval_double(x) / combined->den.eval_double(x) ==
              doctest::Approx(expected));
    }
}

TEST_CASE("print/parse fixed point on 100 formulas") {
    for (int iter = 0; iter < 100; ++iter) {
        Expr e = random_expr(4);
        std::string s = e.to_string();
        Expr reparsed = parse_expression(s);
        CHECK(reparsed.to_string() == s);
        // and pointwise agreement
        std::uniform_real_distribution<double> xs(-2.0, 2.0);
        for (int i = 0; i < 5; ++i) {
            double x = xs(rng);
            double a, b;
            try {
                a = e.evaluate(x);
                b = reparsed.evaluate(x);
            } catch (const DomainError&) {
                continue;
            }
            if (!std::isfinite(a) || std::abs(a) > 1e12) continue;
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("polynomial round trip through printing") {
    for (int iter = 0; iter < 50; ++iter) {
        Expr e = random_poly_expr(4);
        auto p = e.as_polynomial();
        REQUIRE(p.has_value());
        auto q = parse_expression(polynomial_to_expr(*p).to_string()).as_polynomial();
        REQUIRE(q.has_value());
        CHECK(*p == *q);
    }
}

TEST_CASE("compiled evaluator agrees with the tree walker") {
    for (int iter = 0; iter < 60; ++iter) {
        Expr e = random_expr(4);
        CompiledExpr c(e);
        std::uniform_real_distribution<double> xs(-3.0, 3.0);
        for (int i = 0; i < 10; ++i) {
            double x = xs(rng);
            double a, b;
            bool a_threw = false, b_threw = false;
            try {
                a = e.evaluate(x);
            } catch (const DomainError&) {
                a_threw = true;
            }
            try {
                b = c(x);
            } catch (const DomainError&) {
                b_threw = true;
            }
            CHECK(a_threw == b_threw);
            if (a_threw || b_threw) continue;
            if (std::isnan(a) || std::isnan(b)) {
                CHECK(std::isnan(a) == std::isnan(b));
            } else if (std::isfinite(a) && std::abs(a) < 1e300) {
                CHECK(a == doctest::Approx(b).epsilon(1e-12));
            }
        }
    }
}
