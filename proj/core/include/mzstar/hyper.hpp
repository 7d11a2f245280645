#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mzstar/big_real.hpp"
#include "mzstar/report.hpp"
#include "mzstar/sampler.hpp"

namespace mzstar {

/// (a)_n = a(a+1)...(a+n-1), 1 for n = 0.
BigReal pochhammer(const BigReal& a, long n);

enum class SumMethod {
  accelerated,  ///< direct head plus asymptotic Γ-ratio tail
  raw,          ///< plain partial sums, capped at kRawTermCap terms
};

inline constexpr std::size_t kRawTermCap = 10'000'000;

/// Margin used by the hypothesis and pole guards of the checks below.
inline constexpr double kHyperMargin = 1e-3;

struct HyperSum {
  BigReal value;
  double error_estimate = 0;
  std::size_t terms = 0;  ///< terms summed directly
};

/// Σ_n Π(tops)_n / (n! Π(bottoms)_n) at unit argument, with
/// tops.size() == bottoms.size() + 1. Requires Σbottoms − Σtops > 0 unless a
/// top is a nonpositive integer (terminating series). Throws ConvergenceError
/// carrying the achieved error if `target_abs_err` is out of reach.
HyperSum hyper_unit_sum(const std::vector<BigReal>& tops, const std::vector<BigReal>& bottoms,
                        double target_abs_err, SumMethod method = SumMethod::accelerated);

/// 2^(16 - precision): the absolute target used when a check sums a series
/// "to working precision".
double working_target(long precision_bits);

struct HyperParams32 {
  std::array<BigReal, 3> tops;
  std::array<BigReal, 2> bottoms;

  /// β₁ + β₂ − α₁ − α₂ − α₃
  BigReal excess() const;
  long precision() const;
  std::vector<std::pair<std::string, BigReal>> named() const;
};

/// Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)).
BigReal f21_unit_gauss(const BigReal& a, const BigReal& b, const BigReal& c);

BigReal f21_unit_direct(const BigReal& a, const BigReal& b, const BigReal& c, double target_abs_err,
                        SumMethod method = SumMethod::accelerated);

BigReal f32_unit_direct(const HyperParams32& p, double target_abs_err, SumMethod method = SumMethod::accelerated);

/// t_{n+1}/t_n of the ₃F₂ series.
BigReal f32_term_ratio(const HyperParams32& p, long n);

/// Direct ₂F₁ sum against Gauss' closed form.
VerificationReport gauss_check(const BigReal& a, const BigReal& b, const BigReal& c, double tolerance = 1e-20);

/// Three-term-to-two-term transformation (valid for excess > 0, α₃ − β₁ + 1 > 0).
VerificationReport trans_check_two(const HyperParams32& p, double tolerance = 1e-20);

/// One-term transformation (valid for excess > 0, β₂ − α₃ > 0).
VerificationReport trans_check_one(const HyperParams32& p, double tolerance = 1e-20);

/// Right side of the ₃F₂(a, b, c; a+b, 1+c) closed form: the Γ prefactor times
/// ψ(1+c−b) − ψ(a) − ψ(b) − γ − Σ_{n≥1} (a)_n(1−b)_n / (n·n!·(1+c−b)_n).
BigReal prop31_closed_form(const BigReal& a, const BigReal& b, const BigReal& c);

/// ₃F₂(a, b, c; a+b, 1+c) summed directly against prop31_closed_form.
VerificationReport prop31_check(const BigReal& a, const BigReal& b, const BigReal& c, double tolerance = 1e-20);

struct EpsilonProbe {
  /// ₃F₂(a, b, c; a+b+ε, 1+c−ε) directly vs the 1/ε-bracket decomposition.
  VerificationReport decomposition;
  /// 2f(ε/2) − f(ε) vs the closed form, tolerance |ε|.
  VerificationReport richardson;
};

/// Requires 1e-6 <= |ε| <= 1e-2 and |ε| <= |a+b|/10.
EpsilonProbe prop31_epsilon_probe(const BigReal& a, const BigReal& b, const BigReal& c, const BigReal& eps,
                                  double tolerance = 1e-15);

/// Seeded parameter points satisfying each check's hypotheses with margin.
class HyperSampler {
 public:
  HyperSampler(std::uint64_t seed, long precision_bits) : rng_(seed), precision_bits_(precision_bits) {}

  std::array<BigReal, 3> gauss();
  HyperParams32 trans_two();
  HyperParams32 trans_one();
  std::array<BigReal, 3> prop31();

 private:
  BigReal draw(double lo, double hi);

  Rng rng_;
  long precision_bits_;
};

/// Names accepted by run_hyper_check: gauss, trans2, trans1, prop31.
const std::vector<std::string>& hyper_check_names();

/// Runs one named check at `samples` seeded points, reports ordered by
/// identity then inputs. prop31 also runs the ε-probe at ε = 1e-2 and 1e-3
/// on the first min(samples, 5) points with |a+b| >= 0.1. Throws DomainError on an unknown name.
std::vector<VerificationReport> run_hyper_check(const std::string& name, std::size_t samples, std::uint64_t seed,
                                                long precision_bits = kDefaultPrecisionBits,
                                                double tolerance = 1e-20);

}  // namespace mzstar
