#include <gtest/gtest.h>

#include "limitlab/errors.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {
namespace {

TEST(RationalTest, TextFormIsReducedNumOverDen) {
  EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(-6, 8)), "-3/4");
}

TEST(RationalTest, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("-1/3"), Rational(-1, 3));
  EXPECT_EQ(parse_rational(to_string(Rational(7, 12))), Rational(7, 12));
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("1 /2"), ParseError);
  EXPECT_THROW(parse_rational("a/b"), ParseError);
}

TEST(RationalTest, InversePowersOfTwo) {
  EXPECT_EQ(inverse_power_of_two(0), Rational(1));
  EXPECT_EQ(inverse_power_of_two(3), Rational(1, 8));
  EXPECT_EQ(inverse_power_of_two(64) * inverse_power_of_two(0) * Rational(Integer(1) << 64),
            Rational(1));
}

TEST(RationalTest, CeilLogarithms) {
  EXPECT_EQ(ceil_log2(Rational(1)), 0);
  EXPECT_EQ(ceil_log2(Rational(2)), 1);
  EXPECT_EQ(ceil_log2(Rational(3)), 2);
  EXPECT_EQ(ceil_log2(Rational(4)), 2);
  EXPECT_EQ(ceil_log2(Rational(5)), 3);
  EXPECT_EQ(ceil_log2(Rational(1, 2)), -1);
  EXPECT_EQ(ceil_log2(Rational(3, 8)), -1);

  EXPECT_EQ(ceil_neg_log2(Rational(1, 2)), 1);
  EXPECT_EQ(ceil_neg_log2(Rational(1)), 0);
  EXPECT_EQ(ceil_neg_log2(Rational(3, 8)), 2);  // -log2(3/8) ~ 1.415
  EXPECT_EQ(ceil_neg_log2(Rational(1, 8)), 3);
  EXPECT_EQ(ceil_neg_log2(Rational(5, 8)), 1);
}

TEST(RationalTest, CeilNegLog2MatchesPowerSearch) {
  // Oracle: smallest e with 2^{-e} <= v.
  for (long long den = 1; den <= 64; ++den) {
    for (long long num = 1; num <= den; ++num) {
      const Rational v(num, den);
      long long e = 0;
      while (inverse_power_of_two(static_cast<std::size_t>(e)) > v) ++e;
      EXPECT_EQ(ceil_neg_log2(v), e) << to_string(v);
    }
  }
}

}  // namespace
}  // namespace limitlab
