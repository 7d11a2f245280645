#include <gtest/gtest.h>

#include "mzstar/error.hpp"
#include "mzstar/series.hpp"
#include "test_support.hpp"

namespace mzstar {
namespace {

using S = RationalSeries;

S u(int order = 8) { return S::u(order); }
S v(int order = 8) { return S::v(order); }
S w(int order = 8) { return S::w(order); }
S one(int order = 8) { return S::one(order); }
S c(long x, int order = 8) { return S::constant(Rational(x), order); }

// Σ s^k/k! written out directly.
S exp_oracle(const S& s) {
  S total = S::one(s.order());
  S power = S::one(s.order());
  for (int k = 1; k <= s.order(); ++k) {
    power = power * s * Rational(1, k);
    total += power;
  }
  return total;
}

// Newton iteration q ← q(2 − sq).
S invert_oracle(const S& s) {
  S q = S::constant(1 / s.constant_term(), s.order());
  for (int i = 0; i < 6; ++i) q = q * (c(2, s.order()) - s * q);
  return q;
}

TEST(Series, Basics) {
  EXPECT_EQ((one() + u()) * (one() - u()), one() - u() * u());
  const S s = u() * v() + w() * Rational(3, 2);
  EXPECT_EQ(s * one(), s);
  EXPECT_EQ(s.coefficient({0, 0, 1}), Rational(3, 2));
  EXPECT_EQ(w().min_degree(), 2);
}

TEST(Series, TruncationToMinOrder) {
  const S a = u(3) * u(3);
  EXPECT_EQ((a * u(1)).order(), 1);
  EXPECT_TRUE((a * u(1)).is_zero());
  // w has degree 2, so w² survives order 4 but not order 3
  EXPECT_FALSE((w(4) * w(4)).is_zero());
  EXPECT_TRUE((w(3) * w(3)).is_zero());
}

TEST(Series, GeometricTimesOneMinusU) {
  const int N = 5;
  S geo(N);
  for (int n = 0; n <= N; ++n) geo.add_term({static_cast<std::uint16_t>(n), 0, 0}, 1);
  // direct convolution oracle on univariate coefficient lists
  std::vector<Rational> a(N + 1, Rational(1)), b(N + 1, Rational(0)), prod(N + 1, Rational(0));
  b[0] = 1;
  b[1] = -1;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) prod[i + j] += a[i] * b[j];
  S expected(N);
  for (int n = 0; n <= N; ++n) expected.add_term({static_cast<std::uint16_t>(n), 0, 0}, prod[n]);
  EXPECT_EQ(geo * (one(N) - u(N)), expected);
  EXPECT_EQ(expected, one(N));
}

TEST(Series, Exp) {
  EXPECT_EQ(series_exp(S(8)), one());
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const S s = testing::random_series(rng, 8, 4, true);
    ASSERT_EQ(series_exp(s), exp_oracle(s));
    ASSERT_EQ(series_exp(s) * series_exp(-s), one());
  }
  EXPECT_THROW(series_exp(one()), DomainError);
}

TEST(Series, ExpOverZetaPoly) {
  const int N = 6;
  const ZetaSeries x = ZetaSeries::u(N);
  const ZetaSeries s = x * ZetaPoly::gamma() + x * x * (ZetaPoly::zeta(2) * Rational(1, 2));
  const ZetaSeries e = series_exp(s);
  const ZetaPoly expected = ZetaPoly::gamma() * ZetaPoly::gamma() * Rational(1, 2) + ZetaPoly::zeta(2) * Rational(1, 2);
  EXPECT_EQ(e.coefficient({2, 0, 0}), expected);
  // term-by-term truncated exponential oracle
  ZetaSeries total = ZetaSeries::one(N), power = ZetaSeries::one(N);
  for (int k = 1; k <= N; ++k) {
    power = power * s * ZetaPoly(Rational(1, k));
    total += power;
  }
  EXPECT_EQ(e, total);
}

TEST(Series, ExpAdditive) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const S s = testing::random_series(rng, 8, 3, true);
    const S t = testing::random_series(rng, 8, 3, true);
    ASSERT_EQ(series_exp(s + t), series_exp(s) * series_exp(t));
  }
}

TEST(Series, Invert) {
  const int N = 7;
  S geo(N);
  for (int n = 0; n <= N; ++n) geo.add_term({static_cast<std::uint16_t>(n), 0, 0}, 1);
  EXPECT_EQ(series_invert(one(N) - u(N)), geo);
  EXPECT_EQ(series_invert(one()), one());
  const S s = one(2) + u(2) + v(2);
  const S expected = one(2) - u(2) - v(2) + u(2) * u(2) + c(2, 2) * u(2) * v(2) + v(2) * v(2);
  EXPECT_EQ(series_invert(s), expected);
  EXPECT_EQ(invert_oracle(s), expected);
  EXPECT_THROW(series_invert(u()), DomainError);
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    S r = testing::random_series(rng, 8, 4, true) + c(3);
    ASSERT_EQ(series_invert(r) * r, one());
    ASSERT_EQ(series_invert(r), invert_oracle(r));
  }
}

TEST(Series, DivExact) {
  const S d = u() * v() + w();
  EXPECT_EQ(series_div_exact(u() * u() * v() + u() * w(), d), u(6));
  EXPECT_EQ(series_div_exact(d, d), one(6));
  EXPECT_THROW(series_div_exact(u(), d), NonDivisibleError);
  EXPECT_THROW(series_div_exact(u(), S(8)), DomainError);
}

TEST(Series, DivExactRoundTrip) {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const int order = 8;
    S d = testing::random_series(rng, order, 4, true);
    if (d.is_zero()) continue;
    const S q = testing::random_series(rng, order, 5);
    const int k = d.min_degree();
    ASSERT_EQ(series_div_exact(q * d, d), q.truncated(order - k)) << i;
  }
}

TEST(Series, PowerSums) {
  const int N = 8;
  const S e1 = v(N) - u(N);
  const S e2 = -(u(N) * v(N) + w(N));
  const auto p = power_sums(e1, e2, 8);
  EXPECT_EQ(p[0], e1);
  EXPECT_EQ(p[1], u(N) * u(N) + v(N) * v(N) + c(2, N) * w(N));
  EXPECT_EQ(p[1] - c(2, N) * e2, (u(N) + v(N)) * (u(N) + v(N)) + c(4, N) * w(N));
  EXPECT_THROW(power_sums(e1, e2, 0), DomainError);
}

TEST(Series, PowerSumsMatchBinomialExpansion) {
  Rng rng(4);
  const int N = 8;
  for (int trial = 0; trial < 10; ++trial) {
    const S e1 = testing::random_series(rng, N, 3, true);
    const S e2 = testing::random_series(rng, N, 3, true);
    const S delta_sq = e1 * e1 - c(4, N) * e2;
    const auto p = power_sums(e1, e2, 6);
    for (int n = 1; n <= 6; ++n) {
      // ((e1+δ)/2)ⁿ + ((e1−δ)/2)ⁿ = 2^(1−n) Σ_{j even} C(n,j) e1^(n−j) δ^j
      S total(N);
      for (int j = 0; j <= n; j += 2) {
        S term = S::constant(Rational(mpz_class(1)), N);
        for (int i = 0; i < n - j; ++i) term = term * e1;
        for (int i = 0; i < j / 2; ++i) term = term * delta_sq;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, j);
        total += term * Rational(binom);
      }
      total = total * Rational(mpz_class(1), mpz_class(1) << (n - 1));
      ASSERT_EQ(p[n - 1], total) << "n=" << n;
    }
  }
}

TEST(Series, RingAxioms) {
  Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    const S a = testing::random_series(rng, 8, 4), b = testing::random_series(rng, 8, 4),
            d = testing::random_series(rng, 8, 4);
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(Series, JsonRoundTrip) {
  const S s = u() * Rational(3, 7) - w() * w() + one();
  const auto j = s.to_json();
  EXPECT_EQ(j["ring"], "rational");
  EXPECT_EQ(j["terms"][0]["coeff"], "1");
  EXPECT_EQ(S::from_json(j), s);
  EXPECT_THROW(ZetaSeries::from_json(j), RingMismatchError);
  const ZetaSeries z = ZetaSeries::u(4) * ZetaPoly::zeta(3);
  EXPECT_EQ(ZetaSeries::from_json(z.to_json()), z);
}

TEST(Series, ComposeUnivariate) {
  // 1 + X + X²/2 at X = u + v, order 2
  const std::vector<Rational> coeffs{1, 1, Rational(1, 2)};
  const S x = u(2) + v(2);
  EXPECT_EQ(compose_univariate(coeffs, x), exp_oracle(x));
}

}  // namespace
}  // namespace mzstar
