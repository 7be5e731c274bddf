#include "limitlab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-') ? 1 : 0;
  if (start == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start),
                     text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

// Sign of 2^exponent - value, value > 0.
int compare_power(long long exponent, const Integer& num, const Integer& den) {
  Integer lhs = den;
  Integer rhs = num;
  if (exponent >= 0) {
    lhs <<= static_cast<unsigned>(exponent);
  } else {
    rhs <<= static_cast<unsigned>(-exponent);
  }
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

long long msb_index(const Integer& value) {
  return static_cast<long long>(boost::multiprecision::msb(value));
}

}  // namespace

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-') {
    throw ParseError("invalid rational '" + std::string(text) + "' (expected num/den)");
  }
  Integer num(std::string{num_text});
  Integer den(std::string{den_text});
  if (den == 0) {
    throw ParseError("zero denominator in rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational inverse_power_of_two(std::size_t exponent) {
  Integer den = 1;
  den <<= exponent;
  return Rational(Integer(1), den);
}

long long ceil_log2(const Rational& value) {
  if (value <= 0) throw std::domain_error("ceil_log2 of a non-positive rational");
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  long long e = msb_index(num) - msb_index(den);
  while (compare_power(e, num, den) < 0) ++e;
  while (compare_power(e - 1, num, den) >= 0) --e;
  return e;
}

long long ceil_neg_log2(const Rational& value) {
  if (value <= 0) throw std::domain_error("ceil_neg_log2 of a non-positive rational");
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  // floor(log2 v): largest e with 2^e <= v.
  long long e = msb_index(num) - msb_index(den);
  while (compare_power(e, num, den) > 0) --e;
  while (compare_power(e + 1, num, den) <= 0) ++e;
  return -e;
}

}  // namespace limitlab
