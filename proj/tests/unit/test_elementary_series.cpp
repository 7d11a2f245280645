#include <gtest/gtest.h>

#include "mzstar/elementary_series.hpp"
#include "mzstar/error.hpp"

namespace mzstar {
namespace {

ZetaSeries normalize(const ZetaSeries& s) {
  return map_coefficients(s, [](const ZetaPoly& p) { return p.even_zetas_as_zeta2(); });
}

TEST(ElementarySeries, GammaOneMinusLinearCoefficient) {
  const ZetaSeries g = elementary_series(ElementaryKind::gamma_one_minus, ZetaSeries::u(6));
  EXPECT_EQ(g.constant_term(), ZetaPoly(1));
  EXPECT_EQ(g.coefficient({1, 0, 0}), ZetaPoly::gamma());
  // u²: γ²/2 + ζ(2)/2
  EXPECT_EQ(g.coefficient({2, 0, 0}), ZetaPoly::gamma() * ZetaPoly::gamma() * Rational(1, 2) +
                                          ZetaPoly::zeta(2) * Rational(1, 2));
}

TEST(ElementarySeries, SinOverPiX) {
  const ZetaSeries s = elementary_series(ElementaryKind::sin_pi_over_pi, ZetaSeries::u(8));
  EXPECT_EQ(s.coefficient({2, 0, 0}), -ZetaPoly::zeta(2));
  // Taylor oracle: (-1)^k π^(2k)/(2k+1)! with π² = 6ζ(2)
  ZetaPoly pi2k(1);
  for (int k = 0; 2 * k <= 8; ++k) {
    Rational c(1);
    c /= Rational(factorial(2 * k + 1));
    if (k % 2) c = -c;
    EXPECT_EQ(s.coefficient({static_cast<std::uint16_t>(2 * k), 0, 0}), pi2k * c) << k;
    pi2k = pi2k * ZetaPoly::zeta(2) * Rational(6);
  }
  EXPECT_TRUE(s.coefficient({3, 0, 0}).is_zero());
}

TEST(ElementarySeries, CosOfSquare) {
  const ZetaSeries X = ZetaSeries::w(8);
  const ZetaSeries c = elementary_series(ElementaryKind::cos_pi, X);
  EXPECT_EQ(c.coefficient({0, 0, 1}), -ZetaPoly::zeta(2) * Rational(3));  // -π²/2
  EXPECT_EQ(c.coefficient({0, 0, 2}), ZetaPoly::zeta(2) * ZetaPoly::zeta(2) * Rational(3, 2));  // π⁴/24
}

TEST(ElementarySeries, ReducedForms) {
  const ZetaSeries x = ZetaSeries::u(10) + ZetaSeries::v(10);
  const ZetaPoly six_z2 = ZetaPoly::zeta(2) * Rational(6);
  EXPECT_EQ(ZetaSeries::one(10) + sin_pi_over_pi_reduced(x) * six_z2,
            elementary_series(ElementaryKind::sin_pi_over_pi, x));
  const ZetaSeries X = x * x + ZetaSeries::w(10) * ZetaPoly(4);
  EXPECT_EQ(ZetaSeries::one(10) + cos_pi_reduced(X) * six_z2, elementary_series(ElementaryKind::cos_pi, X));
}

TEST(ElementarySeries, ReflectionIdentity) {
  // Γ(1−x)Γ(1+x)·sin(πx)/(πx) = 1 through order 10
  const ZetaSeries x = ZetaSeries::u(10);
  const ZetaSeries prod = elementary_series(ElementaryKind::gamma_one_minus, x) *
                          elementary_series(ElementaryKind::gamma_one_minus, -x) *
                          elementary_series(ElementaryKind::sin_pi_over_pi, x);
  EXPECT_EQ(normalize(prod), ZetaSeries::one(10));
}

TEST(ElementarySeries, InverseGammaOnePlus) {
  const ZetaSeries x = ZetaSeries::u(9) - ZetaSeries::w(9);
  const ZetaSeries prod = elementary_series(ElementaryKind::inv_gamma_one_plus, x) *
                          elementary_series(ElementaryKind::gamma_one_minus, -x);
  EXPECT_EQ(prod, ZetaSeries::one(9));
}

TEST(ElementarySeries, Guards) {
  EXPECT_THROW(elementary_series(ElementaryKind::gamma_one_minus, ZetaSeries::one(4)), DomainError);
  EXPECT_THROW(cos_pi_reduced(ZetaSeries::one(4)), DomainError);
}

}  // namespace
}  // namespace mzstar
