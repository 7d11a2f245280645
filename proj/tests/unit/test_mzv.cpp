#include <gtest/gtest.h>

#include "mzstar/error.hpp"
#include "mzstar/mzv.hpp"
#include "mzstar/special_functions.hpp"
#include "test_support.hpp"

namespace mzstar {
namespace {

using testing::big;
using testing::close;

// Every tuple in [1..k]^n, filtered and bucketed by height. Independent of
// the recursive enumerator.
std::vector<std::vector<Composition>> brute_force(int k, int n) {
  std::vector<std::vector<Composition>> out(n + 1);
  std::vector<int> digits(n, 1);
  for (;;) {
    Composition c(digits);
    if (c.weight() == k && c.is_admissible()) out[c.height()].push_back(c);
    int i = n - 1;
    while (i >= 0 && digits[i] == k) digits[i--] = 1;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

MzvOptions truncated_opts() {
  MzvOptions o;
  o.method = MzvMethod::truncated;
  o.precision_bits = 128;
  return o;
}

TEST(Composition, Accessors) {
  const Composition c{3, 1, 2, 1};
  EXPECT_EQ(c.weight(), 7);
  EXPECT_EQ(c.depth(), 4);
  EXPECT_EQ(c.height(), 2);
  EXPECT_TRUE(c.is_admissible());
  EXPECT_FALSE((Composition{1, 2}).is_admissible());
  EXPECT_EQ(Composition::parse("(2,1,1)"), (Composition{2, 1, 1}));
  EXPECT_THROW(Composition::parse("2,,1"), DomainError);
  EXPECT_THROW(Composition({2, 0}), DomainError);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_compositions({3, 2, 1}), (std::vector<Composition>{{2, 1}}));
  EXPECT_EQ(enumerate_compositions({4, 2, 2}), (std::vector<Composition>{{2, 2}}));
  for (int k = 2; k <= 9; ++k) EXPECT_EQ(enumerate_compositions({k, 1, 1}), (std::vector<Composition>{{k}}));
  EXPECT_THROW(enumerate_compositions({4, 2, 0}), DomainError);
  EXPECT_THROW(enumerate_compositions({3, 2, 2}), DomainError);
}

TEST(Enumerate, MatchesBruteForceAndPartitionsByHeight) {
  for (int k = 2; k <= 8; ++k) {
    for (int n = 1; n < k; ++n) {
      const auto oracle = brute_force(k, n);
      std::size_t by_height = 0;
      for (int s = 1; s <= n && n + s <= k; ++s) {
        const auto got = enumerate_compositions({k, n, s});
        ASSERT_EQ(got, oracle[s]) << k << "," << n << "," << s;
        ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
        by_height += got.size();
      }
      std::size_t admissible = 0;
      for (const auto& bucket : oracle) admissible += bucket.size();
      ASSERT_EQ(by_height, admissible) << k << "," << n;
    }
  }
}

TEST(Mzv, DepthOne) {
  const BigReal z2 = zeta_value(2, 256);
  EXPECT_TRUE(close(mzsv_numeric({2}).value, z2, 1e-70));
  EXPECT_TRUE(close(mzv_numeric({2}).value, z2, 1e-70));
  EXPECT_TRUE(close(mzv_numeric({7}).value, zeta_value(7, 256), 1e-70));
}

TEST(Mzv, EulerRelationsAgainstTruncatedOracle) {
  const BigReal z3 = zeta_value(3, 256);
  const MzvResult star21 = mzsv_numeric({2, 1}, truncated_opts());
  EXPECT_TRUE(close(star21.value, 2L * z3, 1e-8));
  EXPECT_EQ(star21.N, 100000u);
  EXPECT_TRUE(close(mzsv_numeric({2, 1}).value, 2L * z3, 1e-70));
  EXPECT_TRUE(close(mzv_numeric({2, 1}, truncated_opts()).value, z3, 1e-8));
  EXPECT_TRUE(close(mzv_numeric({2, 1}).value, z3, 1e-70));
  // ζ(3,1) = π⁴/360
  const BigReal p = pi(256);
  EXPECT_TRUE(close(mzv_numeric({3, 1}).value, p * p * p * p / 360L, 1e-70));
  EXPECT_TRUE(close(x_sum({4, 2, 1}).value, p * p * p * p / 360L, 1e-70));
}

TEST(Mzv, HolderAgreesWithTruncatedOracle) {
  const std::vector<Composition> cases{{2, 2}, {3, 1, 1}, {2, 1, 2}, {4, 1}, {2, 3, 1}, {3, 2, 1, 1}};
  for (const auto& c : cases) {
    const MzvResult a = mzv_numeric(c), b = mzv_numeric(c, truncated_opts());
    EXPECT_TRUE(close(a.value, b.value, 1e-8)) << c.to_string();
    EXPECT_LT(b.error_estimate, 1e-8);
    const MzvResult sa = mzsv_numeric(c), sb = mzsv_numeric(c, truncated_opts());
    EXPECT_TRUE(close(sa.value, sb.value, 1e-8)) << c.to_string();
  }
}

TEST(Mzv, StarInclusionExclusionAndMonotonicity) {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const int k1 = 2 + static_cast<int>(rng.next() % 4), k2 = 1 + static_cast<int>(rng.next() % 4);
    const Composition c{k1, k2};
    const BigReal star = mzsv_numeric(c).value, plain = mzv_numeric(c).value;
    ASSERT_TRUE(close(star, plain + zeta_value(k1 + k2, 256), 1e-8)) << c.to_string();
    ASSERT_GE(star, plain);
  }
  for (const Composition& c : {Composition{2, 1, 1}, Composition{3, 2, 2}, Composition{2, 1, 3, 1}}) {
    EXPECT_GE(mzsv_numeric(c).value, mzv_numeric(c).value);
  }
}

TEST(Mzv, Inadmissible) {
  EXPECT_THROW(mzv_numeric({1, 2}), DomainError);
  EXPECT_THROW(mzsv_numeric(Composition{}), DomainError);
}

TEST(XSums, Examples) {
  EXPECT_TRUE(close(x_star_sum({3, 2, 1}).value, mzsv_numeric({2, 1}).value, 1e-70));
  for (int k = 2; k <= 8; ++k) {
    EXPECT_TRUE(close(x_star_sum({k, 1, 1}).value, zeta_value(k, 256), 1e-10)) << k;
  }
  // frozen from an independent 30-digit mpmath evaluation of the same compositions
  const BigReal sum = x_star_sum({4, 2, 1}).value + x_star_sum({4, 3, 1}).value;
  EXPECT_TRUE(close(sum, big("4.59987374327233731394301571030"), 1e-28));
  EXPECT_TRUE(close(sum, 17L * zeta_value(4, 256) / 4L, 1e-70));
}

TEST(XSums, TruncatedMethodMatches) {
  const SumKey key{5, 3, 1};
  EXPECT_TRUE(close(x_star_sum(key).value, x_star_sum(key, truncated_opts()).value, 1e-8));
  EXPECT_TRUE(close(x_sum(key).value, x_sum(key, truncated_opts()).value, 1e-8));
}

TEST(PhiStarTruncated, StructuralCases) {
  const BigReal u = big("0.1"), v = big("0.15"), t = big("0.05");
  const auto plus = phi_star_truncated(u, v, t, 10);
  const auto minus = phi_star_truncated(u, v, -t, 10);
  EXPECT_EQ(plus.value, minus.value);
  EXPECT_GT(plus.tail_estimate, 0);
  // (0,0,t): only X⋆(2s,s,s)t^(2s−2) survive
  const BigReal zero(0L, 256);
  const BigReal tt = big("0.2");
  BigReal expected(0L, 256);
  for (int s = 1; 2 * s <= 10; ++s) expected += x_star_sum({2 * s, s, s}).value * pow(tt, 2L * s - 2);
  EXPECT_TRUE(close(phi_star_truncated(zero, zero, tt, 10).value, expected, 1e-70));
  EXPECT_TRUE(close(phi_star_truncated(zero, zero, zero, 8).value, zeta_value(2, 256), 1e-70));
  EXPECT_THROW(phi_star_truncated(big("0.3"), v, t, 8), DomainError);
}

TEST(OhnoZagier, Examples) {
  const VerificationReport r = ohno_zagier_check(big("0.1"), big("0.2"), big("0.01"), 12, 1e-4);
  EXPECT_TRUE(r.pass) << r.to_text();
  const VerificationReport sym = ohno_zagier_check(big("0.15"), big("0.15"), big("-0.05"), 12, 1e-4);
  EXPECT_TRUE(sym.pass) << sym.to_text();
  EXPECT_THROW(ohno_zagier_check(big("0.1"), big("0.2"), big("0.02"), 12, 1e-4), DomainError);
}

}  // namespace
}  // namespace mzstar
