#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grasshadri {

/// Arbitrary-precision integer used for every degree-like quantity.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Ranks and multiplicities are small counts; they index enumerations.
using Rank = std::int64_t;

Rational make_rational(const Integer& num, const Integer& den);
Rational slope_of(const Integer& degree, Rank rank);

/// floor(num / den) for den > 0.
Integer floor_div(const Integer& num, const Integer& den);

bool is_integral(const Rational& q);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Renders "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p" or "p/q" with optional leading sign. Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Binomial coefficient C(n, k) as an exact integer; zero when k is out of range.
Integer binomial(Rank n, Rank k);

}  // namespace grasshadri
