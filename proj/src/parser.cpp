#include <cctype>
#include <string>

#include "illum/errors.hpp"
#include "illum/expr.hpp"

namespace illum {

namespace {

constexpr int kMaxExponent = 512;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expr parse() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty formula", 0);
        Expr e = additive();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    Expr additive() {
        Expr e = multiplicative();
        for (;;) {
            skip_ws();
            if (accept('+'))
                e = Expr::add(std::move(e), multiplicative());
            else if (accept('-'))
                e = Expr::sub(std::move(e), multiplicative());
            else
                return e;
        }
    }

    Expr multiplicative() {
        Expr e = unary();
        for (;;) {
            skip_ws();
            if (accept('*'))
                e = Expr::mul(std::move(e), unary());
            else if (accept('/'))
                e = Expr::div(std::move(e), unary());
            else
                return e;
        }
    }

    Expr unary() {
        skip_ws();
        if (accept('-')) return Expr::neg(unary());
        return power();
    }

    Expr power() {
        Expr base = primary();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t exp_pos = pos_;
        Expr raw = unary();  // right-associative: x^2^3 = x^(2^3)
        auto value = raw.fold_constant();
        if (!value) throw ParseError("exponent must be a constant integer", exp_pos);
        if (value->get_den() != 1) throw ParseError("fractional exponent", exp_pos);
        if (*value < 0) throw ParseError("negative exponent", exp_pos);
        if (*value > kMaxExponent) throw ParseError("exponent too large", exp_pos);
        return Expr::pow(std::move(base), static_cast<int>(value->get_num().get_si()));
    }

    Expr primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = additive();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr number() {
        std::size_t start = pos_;
        std::string digits;
        bool dot = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
            } else if (c == '.' && !dot) {
                dot = true;
                digits += c;
            } else {
                break;
            }
            ++pos_;
        }
        auto value = rational_from_string(digits);
        if (!value) throw ParseError("malformed number", start);
        return Expr::constant(*value);
    }

    Expr identifier() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            name += text_[pos_];
            ++pos_;
        }
        if (name == "x") return Expr::variable();
        if (name == "exp" || name == "atan") {
            skip_ws();
            expect('(');
            Expr arg = additive();
            expect(')');
            return name == "exp" ? Expr::exp(std::move(arg)) : Expr::atan(std::move(arg));
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(const std::string& text) { return Parser(text).parse(); }

}  // namespace illum
