#include "mzstar/reference_functions.hpp"

#include <cmath>

#include "mzstar/bernoulli.hpp"
#include "mzstar/error.hpp"
#include "mzstar/sampler.hpp"
#include "mzstar/special_functions.hpp"

namespace mzstar::reference {
namespace {

long shift_target(long wp) { return wp / 2 + 16; }

// log Γ(y) for large positive y.
BigReal log_gamma_stirling(const BigReal& y) {
  const long wp = y.precision();
  BigReal sum = (y - from_fraction(1, 2, wp)) * log(y) - y + ldexp(log(ldexp(pi(wp), 1)), -1);
  const BigReal eps = exp2_int(-wp - 4, wp);
  BigReal y_pow = y;  // y^(2k-1)
  const BigReal y2 = y * y;
  for (unsigned k = 1; k < 4 * static_cast<unsigned>(wp); ++k) {
    BigReal term = to_big_real(bernoulli(2 * k) / Rational(2 * k * (2 * k - 1)), wp) / y_pow;
    sum += term;
    if (abs(term) < eps) return sum;
    y_pow *= y2;
  }
  throw ConvergenceError("log_gamma_stirling: series did not settle", 1.0);
}

}  // namespace

BigReal gamma_stirling(const BigReal& x) {
  const long p = x.precision();
  const long wp = p + 40;
  if (distance_to_nonpositive_integer(x) < kPoleGuard) throw PoleError("gamma_stirling: pole");
  BigReal y = x.with_precision(wp);
  BigReal denom(1L, wp);
  while (y.to_double() < static_cast<double>(shift_target(wp))) {
    denom *= y;
    y += 1L;
  }
  return (exp(log_gamma_stirling(y)) / denom).with_precision(p);
}

BigReal digamma_asymptotic(const BigReal& x) {
  const long p = x.precision();
  const long wp = p + 40;
  if (distance_to_nonpositive_integer(x) < kPoleGuard) throw PoleError("digamma_asymptotic: pole");
  BigReal y = x.with_precision(wp);
  BigReal shift(0L, wp);
  while (y.to_double() < static_cast<double>(shift_target(wp))) {
    shift += 1L / y;
    y += 1L;
  }
  BigReal sum = log(y) - 1L / ldexp(y, 1);
  const BigReal eps = exp2_int(-wp - 4, wp);
  const BigReal y2 = y * y;
  BigReal y_pow = y2;
  for (unsigned k = 1;; ++k) {
    BigReal term = to_big_real(bernoulli(2 * k) / Rational(2 * k), wp) / y_pow;
    sum -= term;
    if (abs(term) < eps) break;
    y_pow *= y2;
  }
  return (sum - shift).with_precision(p);
}

BigReal zeta_euler_maclaurin(unsigned n, long precision_bits) {
  if (n < 2) throw DomainError("zeta_euler_maclaurin: n must be >= 2");
  const long wp = precision_bits + 32;
  const long big_n = wp / 2 + 16;
  BigReal sum(0L, wp);
  for (long k = 1; k < big_n; ++k) sum += pow(BigReal(k, wp), -static_cast<long>(n));
  const BigReal x(big_n, wp);
  sum += pow(x, 1 - static_cast<long>(n)) / static_cast<long>(n - 1);
  sum += ldexp(pow(x, -static_cast<long>(n)), -1);
  const BigReal eps = exp2_int(-wp - 4, wp);
  mpz_class rising = n;  // n (n+1) ... (n+2j-2)
  mpz_class fact = 2;
  for (unsigned j = 1;; ++j) {
    Rational c = bernoulli(2 * j) * Rational(rising) / Rational(fact);
    BigReal term = to_big_real(c, wp) * pow(x, -static_cast<long>(n + 2 * j - 1));
    sum += term;
    if (abs(term) < eps) break;
    rising *= (n + 2 * j - 1) * (n + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum.with_precision(precision_bits);
}

BigReal euler_gamma_harmonic(long precision_bits) {
  const long wp = precision_bits + 32;
  const long big_n = wp / 2 + 16;
  BigReal h(0L, wp);
  for (long k = 1; k <= big_n; ++k) h += 1L / BigReal(k, wp);
  const BigReal x(big_n, wp);
  BigReal g = h - log(x) - 1L / ldexp(x, 1);
  const BigReal eps = exp2_int(-wp - 4, wp);
  const BigReal x2 = x * x;
  BigReal x_pow = x2;
  for (unsigned k = 1;; ++k) {
    BigReal term = to_big_real(bernoulli(2 * k) / Rational(2 * k), wp) / x_pow;
    g += term;
    if (abs(term) < eps) break;
    x_pow *= x2;
  }
  return g.with_precision(precision_bits);
}

std::vector<CrossCheckResult> cross_validate_special_functions(long precision_bits, std::uint64_t seed,
                                                               int points) {
  std::vector<CrossCheckResult> out;
  const BigReal tol = exp2_int(24 - precision_bits, precision_bits);
  auto record = [&](std::string name, double x, BigReal primary, BigReal ref) {
    BigReal rel = abs(primary - ref) / abs(ref);
    bool ok = rel <= tol;
    out.push_back({std::move(name), x, std::move(primary), std::move(ref), std::move(rel), ok});
  };
  Rng rng(seed);
  int made = 0;
  while (made < points) {
    double xd = rng.uniform(-0.9, 2.5);
    BigReal x(xd, precision_bits);
    if (distance_to_nonpositive_integer(x) < 1e-3) continue;
    record("gamma", xd, gamma(x), gamma_stirling(x));
    record("digamma", xd, digamma(x), digamma_asymptotic(x));
    ++made;
  }
  for (unsigned n = 2; n <= 8; ++n) {
    record("zeta(" + std::to_string(n) + ")", static_cast<double>(n), zeta_value(n, precision_bits),
           zeta_euler_maclaurin(n, precision_bits));
  }
  record("euler_gamma", 0.0, euler_gamma(precision_bits), euler_gamma_harmonic(precision_bits));
  return out;
}

}  // namespace mzstar::reference
