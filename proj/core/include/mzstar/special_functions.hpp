#pragma once

#include "mzstar/big_real.hpp"

namespace mzstar {

/// Arguments closer than this to a pole of Γ/ψ (or an integer, for cot πx)
/// are rejected with PoleError.
inline constexpr double kPoleGuard = 1e-6;

/// Γ(x). Throws PoleError near 0, -1, -2, ...
BigReal gamma(const BigReal& x);

/// ψ(x) = Γ'(x)/Γ(x). Throws PoleError near 0, -1, -2, ...
BigReal digamma(const BigReal& x);

enum class TrigKind { sin, cos, cot };

/// sin(πx), cos(πx) or cot(πx) with the argument reduced to [-1/2, 1/2] before
/// multiplying by π. cot throws PoleError when x is near an integer.
BigReal trig_pi(TrigKind kind, const BigReal& x);
inline BigReal sin_pi(const BigReal& x) { return trig_pi(TrigKind::sin, x); }
inline BigReal cos_pi(const BigReal& x) { return trig_pi(TrigKind::cos, x); }
inline BigReal cot_pi(const BigReal& x) { return trig_pi(TrigKind::cot, x); }

/// Riemann ζ(n) for integer n >= 2; cached per (n, precision).
BigReal zeta_value(unsigned n, long precision_bits);

/// Euler's constant γ; cached per precision.
BigReal euler_gamma(long precision_bits);

/// Hurwitz ζ(s, a) = Σ_{k>=0} (a+k)^(-s) for real s > 1, a > 0, by
/// Euler–Maclaurin summation. Precision is that of `s` and `a` (minimum).
BigReal hurwitz_zeta(const BigReal& s, const BigReal& a);

/// Distance from x to the nearest nonpositive integer (for x > 0 this is x).
double distance_to_nonpositive_integer(const BigReal& x);

/// Distance from x to the nearest integer.
double distance_to_integer(const BigReal& x);

}  // namespace mzstar
