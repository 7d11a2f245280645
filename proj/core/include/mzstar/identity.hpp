#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzstar/big_real.hpp"
#include "mzstar/rational.hpp"
#include "mzstar/report.hpp"
#include "mzstar/sampler.hpp"

namespace mzstar {

/// Roots of x² − e1·x + e2, r_plus taking the + branch of the radical.
struct QuadRoots {
  BigReal e1;
  BigReal e2;
  BigReal r_plus;
  BigReal r_minus;
};

/// Throws DomainError when e1² − 4e2 < 0.
QuadRoots quad_roots(const BigReal& e1, const BigReal& e2);

/// a + b = v − u, ab = −uv − t²; a = r_plus.
QuadRoots roots_ab(const BigReal& u, const BigReal& v, const BigReal& t);

/// α + β = u + v, αβ = uv − t²; β = r_minus.
QuadRoots roots_alphabeta(const BigReal& u, const BigReal& v, const BigReal& t);

enum class AForm { trig, gamma_a, gamma_b };

/// A(u, v, a, b) = (1/2π){cos πu / sin πv − cos πv / sin πu + cos π(a−b)(cot πu − cot πv)}
/// in the trigonometric form, or either of its two Γ-forms.
BigReal A_eval(AForm form, const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b);
inline BigReal A_eval(AForm form, const BigReal& u, const BigReal& v, const QuadRoots& r) {
  return A_eval(form, u, v, r.r_plus, r.r_minus);
}

/// Φ₀⋆(u, v, t) = ₃F₂(1−β, 1−β+u, 1; 2−v, 2−β) / ((1−v)(1−β)).
/// `swap_roots` uses β = r_plus instead of r_minus.
BigReal phi_star_3f2(const BigReal& u, const BigReal& v, const BigReal& t, bool swap_roots = false);

/// Φ₀⋆ as the two-series Aoki–Kombu–Ohno expression. Requires |α − β| >= 1e-3.
BigReal phi_star_ako(const BigReal& u, const BigReal& v, const BigReal& t);

/// F(u, v, a, b): the two-series summand with uΦ₀⋆(−u,v,t) − vΦ₀⋆(−v,u,t) = F(a,b) + F(b,a).
BigReal F_eval(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b);
/// Γ-only part of F.
BigReal F1_eval(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b);
/// Part of F carrying ₃F₂(a, −b, u+a; a−b, 1+u+a).
BigReal F2_eval(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b);

/// (u−v)/(ab) + (a−b)uv/(ab(u+a)(u+b)) · Γ(b−a)Γ(1+a−b) · A
BigReal F1_pair_closed_form(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b);
/// (b−a)uv/(ab(u+a)(u+b)) · Γ(b−a)Γ(1+a−b) · A + A · G(u, v, a, b)
BigReal F2_pair_closed_form(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b);

/// (u−v)/(ab) + A(u,v,a,b) Γ(a)Γ(1−a)Γ(b)Γ(1−b)Γ(u+a)Γ(u+b) / (Γ(u)Γ(v)).
/// At t = 0 one of u+a, u+b vanishes; A·Γ(u+a) is then taken through the
/// Γ-form of A, where the 1/Γ(u+a) factor cancels.
BigReal theorem_rhs(const BigReal& u, const BigReal& v, const BigReal& t);

/// 1/u − 1/v + Γ(u+v)/(Γ(u)Γ(v)) ((Γ(v)Γ(1−v))² − (Γ(u)Γ(1−u))²).
BigReal height_one_rhs(const BigReal& u, const BigReal& v);

enum class LhsMethod { f32, ako, truncated };

struct Tiers {
  double tier1 = 1e-20;
  double truncation_w12 = 1e-4;
  double truncation_w14 = 1e-6;
};

VerificationReport a_forms_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers = {});
/// ₃F₂ form vs the two-series form (tier-1), plus the root-swap diagnostic as a note.
VerificationReport phi_agree_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers = {});
/// ₃F₂ form (or the two-series form) vs truncation of the definition at `max_weight`.
VerificationReport phi_truncation_check(const BigReal& u, const BigReal& v, const BigReal& t, LhsMethod closed_form,
                                        int max_weight, double tolerance);
VerificationReport f_sum_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers = {});
VerificationReport f_split_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers = {});
VerificationReport f1_pair_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers = {});
VerificationReport f2_pair_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers = {});
/// uΦ₀⋆(−u,v,t) − vΦ₀⋆(−v,u,t) against theorem_rhs. The truncated left side
/// uses `max_weight` and the truncation tolerance for it.
VerificationReport theorem_check(const BigReal& u, const BigReal& v, const BigReal& t, LhsMethod method,
                                 const Tiers& tiers = {}, int max_weight = 12);
VerificationReport height_one_check(const BigReal& u, const BigReal& v, const Tiers& tiers = {});

/// Left side of the theorem, uΦ₀⋆(−u,v,t) − vΦ₀⋆(−v,u,t).
BigReal theorem_lhs(const BigReal& u, const BigReal& v, const BigReal& t, LhsMethod method, int max_weight = 12);

/// (n−b)/((n+a−b)(n+u+a)) = −a/(u+b) · 1/(n+a−b) + v/(u+b) · 1/(n+u+a), v = u+a+b,
/// in exact arithmetic. Throws DomainError on a vanishing denominator.
bool partial_fraction_holds(const Rational& n, const Rational& a, const Rational& b, const Rational& u);

struct PartialFractionSummary {
  std::size_t points = 0;
  std::size_t failures = 0;
};

/// `count` random rational points (zero denominators resampled).
PartialFractionSummary partial_fraction_check(std::uint64_t seed, std::size_t count);

struct SuiteConfig {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  long precision_bits = kDefaultPrecisionBits;
  Tiers tiers;
  int max_weight = 12;
  /// Points used by the definition-vs-formula (truncation tier) checks.
  std::size_t truncation_samples = 5;
  /// Sampling radius for the truncation-tier checks.
  double truncation_radius = 0.15;
};

/// Names accepted by run_identity, in suite order.
const std::vector<std::string>& identity_names();

/// Runs one named check over seeded sample points. Reports are ordered by
/// identity then input tuple. Throws DomainError on an unknown name.
std::vector<VerificationReport> run_identity(const std::string& name, const SuiteConfig& config);

}  // namespace mzstar
