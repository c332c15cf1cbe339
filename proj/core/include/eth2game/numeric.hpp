#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace eth2game {

// Monetary quantities are exact rationals in GWei. Rounding happens only when
// a report is rendered, never inside a computation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kGweiPerEth = 1'000'000'000ULL;

// Exact value of an IEEE-754 double. Throws std::domain_error on NaN or
// infinity.
Rational rational_from_double(double value);

// Accepts "42", "-3.125", "1e9", "2.5e-3" and fractions like "7/12".
// Decimal text becomes the exact decimal fraction (no detour through binary
// floating point). Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

// Largest integer <= value.
BigInt floor_int(const Rational& value);

// "num/den" in lowest terms; plain "num" when the denominator is 1.
std::string fraction_string(const Rational& value);

// Fixed-point decimal with `digits` fraction digits, rounding half away from
// zero. digits == 0 yields an integer string.
std::string format_fixed(const Rational& value, int digits);

}  // namespace eth2game
