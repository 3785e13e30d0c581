#include "illum/expr.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "illum/errors.hpp"

namespace illum {

struct Expr::Node {
    ExprKind kind;
    Rational value;  // Constant
    int exponent = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {
using NodePtr = std::shared_ptr<const Expr::Node>;
}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Expr() : Expr(constant(Rational(0))) {}

ExprKind Expr::kind() const { return node_->kind; }

const Rational& Expr::constant_value() const {
    if (node_->kind != ExprKind::Constant) throw std::logic_error("not a constant node");
    return node_->value;
}

int Expr::exponent() const {
    if (node_->kind != ExprKind::Pow) throw std::logic_error("not a power node");
    return node_->exponent;
}

Expr Expr::child(int i) const { return Expr(i == 0 ? node_->a : node_->b); }

bool Expr::is_constant(const Rational& v) const {
    return node_->kind == ExprKind::Constant && node_->value == v;
}

Expr Expr::constant(Rational value) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Constant;
    n->value = std::move(value);
    return Expr(std::move(n));
}

Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Variable;
    return Expr(std::move(n));
}

namespace {

NodePtr binary_node(ExprKind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr unary_node(ExprKind kind, NodePtr a) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->a = std::move(a);
    return n;
}

}  // namespace

Expr Expr::add(Expr a, Expr b) {
    if (a.kind() == ExprKind::Constant && b.kind() == ExprKind::Constant)
        return constant(a.constant_value() + b.constant_value());
    if (a.is_constant(Rational(0))) return b;
    if (b.is_constant(Rational(0))) return a;
    return Expr(binary_node(ExprKind::Add, std::move(a.node_), std::move(b.node_)));
}

Expr Expr::sub(Expr a, Expr b) {
    if (a.kind() == ExprKind::Constant && b.kind() == ExprKind::Constant)
        return constant(a.constant_value() - b.constant_value());
    if (b.is_constant(Rational(0))) return a;
    return Expr(binary_node(ExprKind::Sub, std::move(a.node_), std::move(b.node_)));
}

Expr Expr::mul(Expr a, Expr b) {
    if (a.kind() == ExprKind::Constant && b.kind() == ExprKind::Constant)
        return constant(a.constant_value() * b.constant_value());
    if (a.is_constant(Rational(0)) || b.is_constant(Rational(0))) return constant(Rational(0));
    if (a.is_constant(Rational(1))) return b;
    if (b.is_constant(Rational(1))) return a;
    return Expr(binary_node(ExprKind::Mul, std::move(a.node_), std::move(b.node_)));
}

Expr Expr::div(Expr a, Expr b) {
    if (b.kind() == ExprKind::Constant && b.constant_value() != 0) {
        if (a.kind() == ExprKind::Constant) return constant(a.constant_value() / b.constant_value());
        if (b.constant_value() == 1) return a;
    }
    return Expr(binary_node(ExprKind::Div, std::move(a.node_), std::move(b.node_)));
}

Expr Expr::pow(Expr base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent == 1) return base;
    if (base.kind() == ExprKind::Constant)
        return constant(rational_pow(base.constant_value(), static_cast<unsigned long>(exponent)));
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Pow;
    n->exponent = exponent;
    n->a = std::move(base.node_);
    return Expr(std::move(n));
}

Expr Expr::neg(Expr a) {
    if (a.kind() == ExprKind::Constant) return constant(-a.constant_value());
    if (a.kind() == ExprKind::Neg) return Expr(a.node_->a);
    return Expr(unary_node(ExprKind::Neg, std::move(a.node_)));
}

Expr Expr::exp(Expr a) {
    if (a.is_constant(Rational(0))) return constant(Rational(1));
    return Expr(unary_node(ExprKind::Exp, std::move(a.node_)));
}

Expr Expr::atan(Expr a) {
    if (a.is_constant(Rational(0))) return constant(Rational(0));
    return Expr(unary_node(ExprKind::Atan, std::move(a.node_)));
}

double Expr::evaluate(double x) const {
    switch (node_->kind) {
        case ExprKind::Constant: return to_double(node_->value);
        case ExprKind::Variable: return x;
        case ExprKind::Add: return Expr(node_->a).evaluate(x) + Expr(node_->b).evaluate(x);
        case ExprKind::Sub: return Expr(node_->a).evaluate(x) - Expr(node_->b).evaluate(x);
        case ExprKind::Mul: return Expr(node_->a).evaluate(x) * Expr(node_->b).evaluate(x);
        case ExprKind::Div: {
            double num = Expr(node_->a).evaluate(x);
            double den = Expr(node_->b).evaluate(x);
            if (den == 0.0) throw DomainError("division by zero");
            return num / den;
        }
        case ExprKind::Pow: {
            double base = Expr(node_->a).evaluate(x);
            double acc = 1.0;
            double b = base;
            for (int e = node_->exponent; e > 0; e >>= 1) {
                if (e & 1) acc *= b;
                if (e > 1) b *= b;
            }
            return acc;
        }
        case ExprKind::Neg: return -Expr(node_->a).evaluate(x);
        case ExprKind::Exp: return std::exp(Expr(node_->a).evaluate(x));
        case ExprKind::Atan: return std::atan(Expr(node_->a).evaluate(x));
    }
    throw std::logic_error("unreachable");
}

Expr Expr::differentiate() const {
    switch (node_->kind) {
        case ExprKind::Constant: return constant(Rational(0));
        case ExprKind::Variable: return constant(Rational(1));
        case ExprKind::Add: return add(Expr(node_->a).differentiate(), Expr(node_->b).differentiate());
        case ExprKind::Sub: return sub(Expr(node_->a).differentiate(), Expr(node_->b).differentiate());
        case ExprKind::Mul: {
            Expr a(node_->a), b(node_->b);
            return add(mul(a.differentiate(), b), mul(a, b.differentiate()));
        }
        case ExprKind::Div: {
            Expr a(node_->a), b(node_->b);
            return div(sub(mul(a.differentiate(), b), mul(a, b.differentiate())), pow(b, 2));
        }
        case ExprKind::Pow: {
            Expr base(node_->a);
            int k = node_->exponent;
            if (k == 0) return constant(Rational(0));
            return mul(mul(constant(Rational(k)), pow(base, k - 1)), base.differentiate());
        }
        case ExprKind::Neg: return neg(Expr(node_->a).differentiate());
        case ExprKind::Exp: {
            Expr a(node_->a);
            return mul(a.differentiate(), exp(a));
        }
        case ExprKind::Atan: {
            Expr a(node_->a);
            return div(a.differentiate(), add(constant(Rational(1)), pow(a, 2)));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// Printer precedence levels; parenthesization keeps print/parse a fixed
// point at string level.
int precedence(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        case ExprKind::Constant:
            return sign(e.constant_value()) < 0 ? 3 : 5;
        default: return 5;
    }
}

std::string print_expr(const Expr& e);

std::string print_child(const Expr& c, int min_prec) {
    std::string s = print_expr(c);
    if (precedence(c) < min_prec) return "(" + s + ")";
    return s;
}

std::string print_expr(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant: return to_string(e.constant_value());
        case ExprKind::Variable: return "x";
        case ExprKind::Add: return print_child(e.child(0), 1) + " + " + print_child(e.child(1), 2);
        case ExprKind::Sub: return print_child(e.child(0), 1) + " - " + print_child(e.child(1), 2);
        case ExprKind::Mul: return print_child(e.child(0), 2) + "*" + print_child(e.child(1), 3);
        case ExprKind::Div: return print_child(e.child(0), 2) + "/" + print_child(e.child(1), 3);
        case ExprKind::Neg: return "-" + print_child(e.child(0), 3);
        case ExprKind::Pow: return print_child(e.child(0), 5) + "^" + std::to_string(e.exponent());
        case ExprKind::Exp: return "exp(" + print_expr(e.child(0)) + ")";
        case ExprKind::Atan: return "atan(" + print_expr(e.child(0)) + ")";
    }
    return "?";
}

}  // namespace

std::string Expr::to_string() const { return print_expr(*this); }

std::optional<Rational> Expr::fold_constant() const {
    switch (node_->kind) {
        case ExprKind::Constant: return node_->value;
        case ExprKind::Variable: return std::nullopt;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
        case ExprKind::Div: {
            auto a = Expr(node_->a).fold_constant();
            auto b = Expr(node_->b).fold_constant();
            if (!a || !b) return std::nullopt;
            switch (node_->kind) {
                case ExprKind::Add: return *a + *b;
                case ExprKind::Sub: return *a - *b;
                case ExprKind::Mul: return *a * *b;
                default:
                    if (*b == 0) return std::nullopt;
                    return *a / *b;
            }
        }
        case ExprKind::Pow: {
            auto a = Expr(node_->a).fold_constant();
            if (!a) return std::nullopt;
            return rational_pow(*a, static_cast<unsigned long>(node_->exponent));
        }
        case ExprKind::Neg: {
            auto a = Expr(node_->a).fold_constant();
            if (!a) return std::nullopt;
            return -*a;
        }
        case ExprKind::Exp: {
            auto a = Expr(node_->a).fold_constant();
            if (a && *a == 0) return Rational(1);
            return std::nullopt;
        }
        case ExprKind::Atan: {
            auto a = Expr(node_->a).fold_constant();
            if (a && *a == 0) return Rational(0);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

Polynomial poly_pow(const Polynomial& base, int e) {
    Polynomial acc = Polynomial::constant(Rational(1));
    Polynomial b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return acc;
}

}  // namespace

std::optional<Polynomial> Expr::as_polynomial() const {
    switch (node_->kind) {
        case ExprKind::Constant: return Polynomial::constant(node_->value);
        case ExprKind::Variable: return Polynomial::variable();
        case ExprKind::Add: {
            auto a = Expr(node_->a).as_polynomial(), b = Expr(node_->b).as_polynomial();
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
        case ExprKind::Sub: {
            auto a = Expr(node_->a).as_polynomial(), b = Expr(node_->b).as_polynomial();
            if (!a || !b) return std::nullopt;
            return *a - *b;
        }
        case ExprKind::Mul: {
            auto a = Expr(node_->a).as_polynomial(), b = Expr(node_->b).as_polynomial();
            if (!a || !b) return std::nullopt;
            return *a * *b;
        }
        case ExprKind::Div: {
            auto a = Expr(node_->a).as_polynomial();
            auto c = Expr(node_->b).fold_constant();
            if (!a || !c || *c == 0) return std::nullopt;
            Polynomial r = *a;
            r *= Rational(1) / *c;
            return r;
        }
        case ExprKind::Pow: {
            auto a = Expr(node_->a).as_polynomial();
            if (!a) return std::nullopt;
            return poly_pow(*a, node_->exponent);
        }
        case ExprKind::Neg: {
            auto a = Expr(node_->a).as_polynomial();
            if (!a) return std::nullopt;
            return -*a;
        }
        case ExprKind::Exp:
        case ExprKind::Atan: {
            auto c = fold_constant();
            if (c) return Polynomial::constant(*c);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Expr polynomial_to_expr(const Polynomial& p) {
    Expr result = Expr::constant(Rational(0));
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (c == 0) continue;
        Expr term = k == 0 ? Expr::constant(c)
                           : Expr::mul(Expr::constant(c), Expr::pow(Expr::variable(), k));
        result = Expr::add(std::move(result), std::move(term));
    }
    return result;
}

std::optional<RationalForm> as_rational_form(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return RationalForm{Polynomial::constant(e.constant_value()),
                                Polynomial::constant(Rational(1))};
        case ExprKind::Variable:
            return RationalForm{Polynomial::variable(), Polynomial::constant(Rational(1))};
        case ExprKind::Add:
        case ExprKind::Sub: {
            auto a = as_rational_form(e.child(0)), b = as_rational_form(e.child(1));
            if (!a || !b) return std::nullopt;
            Polynomial num = e.kind() == ExprKind::Add ? a->num * b->den + b->num * a->den
                                                       : a->num * b->den - b->num * a->den;
            return RationalForm{std::move(num), a->den * b->den};
        }
        case ExprKind::Mul: {
            auto a = as_rational_form(e.child(0)), b = as_rational_form(e.child(1));
            if (!a || !b) return std::nullopt;
            return RationalForm{a->num * b->num, a->den * b->den};
        }
        case ExprKind::Div: {
            auto a = as_rational_form(e.child(0)), b = as_rational_form(e.child(1));
            if (!a || !b || b->num.is_zero()) return std::nullopt;
            return RationalForm{a->num * b->den, a->den * b->num};
        }
        case ExprKind::Pow: {
            auto a = as_rational_form(e.child(0));
            if (!a) return std::nullopt;
            return RationalForm{poly_pow(a->num, e.exponent()), poly_pow(a->den, e.exponent())};
        }
        case ExprKind::Neg: {
            auto a = as_rational_form(e.child(0));
            if (!a) return std::nullopt;
            return RationalForm{-a->num, a->den};
        }
        case ExprKind::Exp:
        case ExprKind::Atan: {
            auto c = e.fold_constant();
            if (c) return RationalForm{Polynomial::constant(*c), Polynomial::constant(Rational(1))};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

CompiledExpr::CompiledExpr() : CompiledExpr(Expr()) {}

CompiledExpr::CompiledExpr(const Expr& e) {
    stack_need_ = 0;
    std::size_t depth = 0;
    // Post-order flatten.
    struct Frame {
        Expr node;
        int stage;
    };
    std::vector<Frame> stack{{e, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        ExprKind k = f.node.kind();
        bool binary = k == ExprKind::Add || k == ExprKind::Sub || k == ExprKind::Mul || k == ExprKind::Div;
        bool unary = k == ExprKind::Pow || k == ExprKind::Neg || k == ExprKind::Exp || k == ExprKind::Atan;
        if (f.stage == 0 && (binary || unary)) {
            stack.push_back({f.node, 1});
            if (binary) stack.push_back({f.node.child(1), 0});
            stack.push_back({f.node.child(0), 0});
            continue;
        }
        switch (k) {
            case ExprKind::Constant:
                program_.push_back({Op::Const, 0, to_double(f.node.constant_value())});
                ++depth;
                break;
            case ExprKind::Variable:
                program_.push_back({Op::X, 0, 0.0});
                ++depth;
                break;
            case ExprKind::Add: program_.push_back({Op::Add, 0, 0.0}); --depth; break;
            case ExprKind::Sub: program_.push_back({Op::Sub, 0, 0.0}); --depth; break;
            case ExprKind::Mul: program_.push_back({Op::Mul, 0, 0.0}); --depth; break;
            case ExprKind::Div: program_.push_back({Op::Div, 0, 0.0}); --depth; break;
            case ExprKind::Pow: program_.push_back({Op::Pow, f.node.exponent(), 0.0}); break;
            case ExprKind::Neg: program_.push_back({Op::Neg, 0, 0.0}); break;
            case ExprKind::Exp: program_.push_back({Op::Exp, 0, 0.0}); break;
            case ExprKind::Atan: program_.push_back({Op::Atan, 0, 0.0}); break;
        }
        stack_need_ = std::max(stack_need_, depth);
    }
    stack_need_ += 2;
}

double CompiledExpr::operator()(double x) const {
    double local[64];
    std::vector<double> heap;
    double* st = local;
    if (stack_need_ > 64) {
        heap.resize(stack_need_);
        st = heap.data();
    }
    std::size_t top = 0;
    for (const Instr& ins : program_) {
        switch (ins.op) {
            case Op::Const: st[top++] = ins.value; break;
            case Op::X: st[top++] = x; break;
            case Op::Add: --top; st[top - 1] += st[top]; break;
            case Op::Sub: --top; st[top - 1] -= st[top]; break;
            case Op::Mul: --top; st[top - 1] *= st[top]; break;
            case Op::Div: {
                --top;
                if (st[top] == 0.0) throw DomainError("division by zero");
                st[top - 1] /= st[top];
                break;
            }
            case Op::Pow: {
                double b = st[top - 1];
                double acc = 1.0;
                for (int e = ins.arg; e > 0; e >>= 1) {
                    if (e & 1) acc *= b;
                    if (e > 1) b *= b;
                }
                st[top - 1] = acc;
                break;
            }
            case Op::Neg: st[top - 1] = -st[top - 1]; break;
            case Op::Exp: st[top - 1] = std::exp(st[top - 1]); break;
            case Op::Atan: st[top - 1] = std::atan(st[top - 1]); break;
        }
    }
    return st[0];
}

}  // namespace illum
