#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace limitlab {

/// Exact, always-reduced fraction with arbitrary-precision numerator and
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "num/den" text form. Integers are written with an explicit "/1".
std::string to_string(const Rational& value);

/// Accepts "num/den" or a bare integer; whitespace is not allowed.
/// Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// 2^{-exponent}.
Rational inverse_power_of_two(std::size_t exponent);

/// ceil(log2(value)) for value > 0; may be negative for value < 1.
long long ceil_log2(const Rational& value);

/// ceil(-log2(value)) for 0 < value.
long long ceil_neg_log2(const Rational& value);

}  // namespace limitlab
