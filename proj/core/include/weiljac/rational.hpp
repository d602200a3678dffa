#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace weiljac {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den; den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Representative of x modulo 1 in [0, 1).
Rational mod1(const Rational& x);

Integer floor_of(const Rational& x);
bool is_integer(const Rational& x);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace weiljac
