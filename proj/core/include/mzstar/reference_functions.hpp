#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzstar/big_real.hpp"

// Second, independently coded evaluations of the special functions. They
// share no code path with the MPFR-backed versions in special_functions.hpp
// and exist to validate them.
namespace mzstar::reference {

/// Γ(x) via upward recurrence to x + m >= ~prec/2 and the Stirling series.
BigReal gamma_stirling(const BigReal& x);

/// ψ(x) via upward recurrence and the asymptotic series.
BigReal digamma_asymptotic(const BigReal& x);

/// ζ(n) by Euler–Maclaurin on the partial sums Σ k^-n.
BigReal zeta_euler_maclaurin(unsigned n, long precision_bits);

/// γ = H_N - log N - 1/(2N) + Σ B_2k / (2k N^2k).
BigReal euler_gamma_harmonic(long precision_bits);

struct CrossCheckResult {
  std::string function;
  double x;
  BigReal primary;
  BigReal reference;
  BigReal relative_error;
  bool pass;
};

/// Compares Γ and ψ against their reference methods at `points` seeded
/// random arguments in (-0.9, 2.5) away from poles, plus ζ(2..8) and γ.
/// Tolerance: relative error <= 2^(24 - precision_bits).
std::vector<CrossCheckResult> cross_validate_special_functions(long precision_bits, std::uint64_t seed,
                                                               int points = 10);

}  // namespace mzstar::reference
