#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace illum {

// Exact scalar substrate. GMP's canonical mpq keeps gcd(|num|, den) = 1 and
// den >= 1, which is exactly the representation the rest of the library
// assumes.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// "7", "-3/4" (den omitted when 1).
std::string to_string(const Rational& r);

/// Accepts integer ("-12"), fraction ("5/4") and decimal ("0.25") literals;
/// decimals convert exactly. Returns nullopt on malformed input.
std::optional<Rational> rational_from_string(std::string_view text);

/// base^exp by repeated squaring, exp >= 0.
Rational rational_pow(const Rational& base, unsigned long exp);

}  // namespace illum
