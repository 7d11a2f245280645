#include <gtest/gtest.h>

#include "mzstar/error.hpp"
#include "mzstar/identity.hpp"
#include "mzstar/mzv.hpp"
#include "test_support.hpp"

namespace mzstar {
namespace {

using testing::big;
using testing::close;

constexpr double kTier1 = 1e-20;

TEST(Roots, Examples) {
  const BigReal u = big("0.1"), v = big("0.2"), zero(0L, 256);
  const QuadRoots r0 = roots_ab(u, v, zero);
  EXPECT_TRUE(close(r0.r_plus, v, 1e-70));
  EXPECT_TRUE(close(r0.r_minus, -u, 1e-70));
  const QuadRoots rt = roots_ab(zero, zero, big("0.05"));
  EXPECT_TRUE(close(rt.r_plus, big("0.05"), 1e-70));
  EXPECT_TRUE(close(rt.r_minus, big("-0.05"), 1e-70));
  EXPECT_THROW(quad_roots(zero, big("1")), DomainError);
}

TEST(Roots, InvariantsOnSampledPoints) {
  DomainSampler sampler(12, 256);
  const double tol = std::ldexp(1.0, 32 - 256);
  for (int i = 0; i < 200; ++i) {
    const SamplePoint p = sampler.next();
    const QuadRoots ab = roots_ab(p.u, p.v, p.t);
    ASSERT_TRUE(close(ab.r_plus + ab.r_minus, ab.e1, tol));
    ASSERT_TRUE(close(ab.r_plus * ab.r_minus, ab.e2, tol));
    // (u+a)(u+b) = u² + u(a+b) + ab = −t²
    ASSERT_TRUE(close((p.u + ab.r_plus) * (p.u + ab.r_minus), -(p.t * p.t), tol));
    const QuadRoots al = roots_alphabeta(p.u, p.v, p.t);
    ASSERT_TRUE(close(al.r_plus * al.r_minus, p.u * p.v - p.t * p.t, tol));
    ASSERT_GE(al.r_plus, al.r_minus);
  }
}

TEST(AFunction, FormsAgreeAndSymmetry) {
  const BigReal u = big("0.1"), v = big("0.2"), t = big("0.05");
  const QuadRoots r = roots_ab(u, v, t);
  const BigReal trig = A_eval(AForm::trig, u, v, r);
  EXPECT_TRUE(close(trig, A_eval(AForm::gamma_a, u, v, r), kTier1));
  EXPECT_TRUE(close(trig, A_eval(AForm::gamma_b, u, v, r), kTier1));
  EXPECT_TRUE(close(trig, A_eval(AForm::trig, u, v, r.r_minus, r.r_plus), 1e-70));
  const QuadRoots d = roots_ab(u, u, t);
  EXPECT_TRUE(A_eval(AForm::trig, u, u, d).is_zero());
}

TEST(AFunction, SampledAgreement) {
  DomainSampler sampler(4, 256);
  for (int i = 0; i < 100; ++i) {
    const SamplePoint p = sampler.next();
    const VerificationReport r = a_forms_check(p.u, p.v, p.t);
    ASSERT_TRUE(r.pass) << r.to_text();
  }
}

TEST(PhiStar, FrozenValueAndRootSwap) {
  // 40-digit mpmath evaluation of the 3F2 form at (0.1, 0.2, 0.05), both root orders
  const BigReal u = big("0.1"), v = big("0.2"), t = big("0.05");
  const BigReal expected = big("2.479091110205407185884461216067637086781");
  EXPECT_TRUE(close(phi_star_3f2(u, v, t), expected, 1e-36));
  EXPECT_TRUE(close(phi_star_3f2(u, v, t, true), expected, 1e-36));
  EXPECT_TRUE(close(phi_star_ako(u, v, t), expected, 1e-36));
}

TEST(PhiStar, AgainstDefinition) {
  const BigReal u = big("0.1"), v = big("0.15"), t = big("0.05");
  const VerificationReport r = phi_truncation_check(u, v, t, LhsMethod::f32, 14, 1e-6);
  EXPECT_TRUE(r.pass) << r.to_text();
  const VerificationReport a = phi_truncation_check(u, v, t, LhsMethod::ako, 14, 1e-6);
  EXPECT_TRUE(a.pass) << a.to_text();
}

TEST(PhiStar, HeightOneSlice) {
  const BigReal zero(0L, 256);
  for (const char* x : {"0.1", "-0.12", "0.2"}) {
    const BigReal u = big(x), v = big("0.17");
    EXPECT_TRUE(close(phi_star_3f2(u, v, zero), phi_star_ako(u, v, zero), kTier1)) << x;
  }
  // u = 0 is a regular point of the two-series form
  EXPECT_TRUE(close(phi_star_ako(zero, big("0.17"), big("0.1")), phi_star_3f2(zero, big("0.17"), big("0.1")), kTier1));
}

TEST(PhiStar, TwoFormsAgreeOnSamples) {
  DomainSampler sampler(8, 256);
  for (int i = 0; i < 30; ++i) {
    const SamplePoint p = sampler.next();
    const VerificationReport r = phi_agree_check(p.u, p.v, p.t);
    ASSERT_TRUE(r.pass) << r.to_text();
  }
}

TEST(FChain, SampledIdentities) {
  DomainSampler sampler(21, 256);
  for (int i = 0; i < 25; ++i) {
    const SamplePoint p = sampler.next();
    for (const auto& r : {f_sum_check(p.u, p.v, p.t), f_split_check(p.u, p.v, p.t), f1_pair_check(p.u, p.v, p.t),
                          f2_pair_check(p.u, p.v, p.t)}) {
      ASSERT_TRUE(r.pass) << r.to_text();
    }
  }
}

TEST(FChain, RootSwapInvariance) {
  DomainSampler sampler(30, 256);
  for (int i = 0; i < 10; ++i) {
    const SamplePoint p = sampler.next();
    const QuadRoots r = roots_ab(p.u, p.v, p.t);
    const BigReal& a = r.r_plus;
    const BigReal& b = r.r_minus;
    ASSERT_TRUE(close(A_eval(AForm::trig, p.u, p.v, a, b), A_eval(AForm::trig, p.u, p.v, b, a), kTier1));
    ASSERT_TRUE(close(F1_pair_closed_form(p.u, p.v, a, b), F1_pair_closed_form(p.u, p.v, b, a), kTier1));
    ASSERT_TRUE(close(F2_pair_closed_form(p.u, p.v, a, b), F2_pair_closed_form(p.u, p.v, b, a), kTier1));
  }
}

TEST(GeneratingFunction, Examples) {
  const BigReal u = big("0.1"), v = big("0.2"), t = big("0.05");
  const VerificationReport r = theorem_check(u, v, t, LhsMethod::f32);
  EXPECT_TRUE(r.pass) << r.to_text();
  EXPECT_TRUE(theorem_check(u, v, t, LhsMethod::ako).pass);
  EXPECT_EQ(r.lhs, -theorem_check(v, u, t, LhsMethod::f32).lhs);
  const VerificationReport diag = theorem_check(u, u, t, LhsMethod::f32);
  EXPECT_TRUE(diag.lhs.is_zero());
  EXPECT_TRUE(diag.pass) << diag.to_text();
}

TEST(GeneratingFunction, DefinitionalLeftSide) {
  DomainSampler sampler(6, 256, DomainLimits{0.15, 1e-3});
  for (int i = 0; i < 3; ++i) {
    const SamplePoint p = sampler.next();
    const VerificationReport r = theorem_check(p.u, p.v, p.t, LhsMethod::truncated, {}, 12);
    ASSERT_TRUE(r.pass) << r.to_text();
  }
}

TEST(HeightOne, Examples) {
  const BigReal u = big("0.1"), v = big("0.2"), zero(0L, 256);
  const VerificationReport r = height_one_check(u, v);
  EXPECT_TRUE(r.pass) << r.to_text();
  const VerificationReport diag = height_one_check(u, u);
  EXPECT_TRUE(diag.pass) << diag.to_text();
  EXPECT_LT(abs(diag.rhs).to_double(), kTier1);
  const VerificationReport thm = theorem_check(u, v, zero, LhsMethod::f32);
  EXPECT_TRUE(thm.pass) << thm.to_text();
  EXPECT_TRUE(close(thm.lhs, r.lhs, kTier1));
  EXPECT_TRUE(close(theorem_rhs(u, v, zero), height_one_rhs(u, v), kTier1));
}

TEST(PartialFraction, ExactOnRandomRationals) {
  const PartialFractionSummary s = partial_fraction_check(42, 1000);
  EXPECT_EQ(s.points, 1000u);
  EXPECT_EQ(s.failures, 0u);
  EXPECT_TRUE(partial_fraction_holds(Rational(3), Rational(1, 3), Rational(-2, 7), Rational(5, 11)));
  // v is forced to u + a + b; any other v breaks the identity, so a perturbed
  // right side must differ
  const Rational n(2), a(1, 3), b(1, 5), u(1, 7);
  const Rational lhs = (n - b) / ((n + a - b) * (n + u + a));
  const Rational wrong_v = u + a + b + Rational(1, 1000);
  EXPECT_NE(lhs, (-a / (u + b)) / (n + a - b) + (wrong_v / (u + b)) / (n + u + a));
  EXPECT_THROW(partial_fraction_holds(Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)), DomainError);
}

TEST(Suite, DeterministicAndOrdered) {
  SuiteConfig c;
  c.samples = 4;
  c.seed = 7;
  const auto first = run_identity("lemma21", c);
  const auto second = run_identity("lemma21", c);
  ASSERT_EQ(first.size(), 4u);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].to_json().dump(), second[i].to_json().dump());
    EXPECT_TRUE(first[i].pass);
  }
  for (std::size_t i = 1; i < first.size(); ++i) EXPECT_LE(first[i - 1].input("u"), first[i].input("u"));
  EXPECT_THROW(run_identity("nope", c), DomainError);
  const auto pf = run_identity("partial-fraction", c);
  ASSERT_EQ(pf.size(), 1u);
  EXPECT_TRUE(pf[0].pass);
}

}  // namespace
}  // namespace mzstar
