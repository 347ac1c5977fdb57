#include <gtest/gtest.h>

#include "lcmlat/error.hpp"
#include "lcmlat/interval.hpp"

namespace lcmlat {
namespace {

TEST(Interval, RationalEnclosure) {
  const Rational third(1, 3);
  const CertifiedReal x = CertifiedReal::from_rational(third, 64);
  EXPECT_TRUE(x.contains(third));
  EXPECT_LT(x.lo(), x.hi());
  EXPECT_EQ(x.sign(), Sign::kPositive);
  EXPECT_EQ((-x).sign(), Sign::kNegative);
  EXPECT_EQ((x - x).sign(), Sign::kIndeterminate);
  EXPECT_EQ(CertifiedReal(64).sign(), Sign::kZero);
}

TEST(Interval, ArithmeticContainsExactResults) {
  const CertifiedReal a = CertifiedReal::from_rational(Rational(1, 3), 53);
  const CertifiedReal b = CertifiedReal::from_rational(Rational(-2, 7), 53);
  EXPECT_TRUE((a + b).contains(Rational(1, 21)));
  EXPECT_TRUE((a - b).contains(Rational(13, 21)));
  EXPECT_TRUE((a * b).contains(Rational(-2, 21)));
  EXPECT_TRUE(b.scaled(-3).contains(Rational(6, 7)));
}

TEST(Interval, ExpLog) {
  const CertifiedReal two = CertifiedReal::from_integer(2, 128);
  const CertifiedReal back = exp(log(two));
  EXPECT_TRUE(back.contains(Rational(2)));
  EXPECT_LT(back.width().to_double(), 1e-30);
  EXPECT_THROW(log(CertifiedReal(64)), Error);
}

TEST(Interval, WidthShrinksWithPrecision) {
  const Rational x(22, 7);
  double previous = 1.0;
  for (Precision p : {32, 64, 128, 256}) {
    const double w = exp(CertifiedReal::from_rational(x, p)).width().to_double();
    EXPECT_LT(w, previous);
    previous = w;
  }
}

TEST(Interval, Formatting) {
  EXPECT_EQ(BigFloat(0.5, 53).to_string(3), "5.00e-01");
  EXPECT_EQ(BigFloat("0.25", 53).to_double(), 0.25);
  EXPECT_THROW(BigFloat("x1", 53), Error);
  EXPECT_STREQ(sign_name(Sign::kIndeterminate), "indeterminate");
}

}  // namespace
}  // namespace lcmlat
