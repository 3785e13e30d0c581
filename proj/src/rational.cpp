#include "illum/rational.hpp"

#include <cctype>

namespace illum {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> rational_from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string int_part, frac_part, den_part;
    bool seen_dot = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? den_part : seen_dot ? frac_part : int_part) += c;
        } else if (c == '.' && !seen_dot && !seen_slash) {
            seen_dot = true;
        } else if (c == '/' && !seen_slash && !seen_dot) {
            seen_slash = true;
        } else {
            return std::nullopt;
        }
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (seen_slash && den_part.empty()) return std::nullopt;

    Integer num(int_part.empty() ? "0" : int_part);
    Integer den(1);
    if (seen_dot && !frac_part.empty()) {
        for (char c : frac_part) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    }
    if (seen_slash) {
        Integer d(den_part);
        if (d == 0) return std::nullopt;
        den *= d;
    }
    Rational r(num, den);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational result(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

}  // namespace illum
