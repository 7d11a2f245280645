#include "mzstar/special_functions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "mzstar/bernoulli.hpp"
#include "mzstar/error.hpp"

namespace mzstar {
namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

void check_gamma_pole(const BigReal& x, const char* who) {
  if (distance_to_nonpositive_integer(x) < kPoleGuard) {
    throw PoleError(std::string(who) + ": argument " + x.to_string(20) + " is within 1e-6 of a pole");
  }
}

}  // namespace

double distance_to_nonpositive_integer(const BigReal& x) {
  if (x.sign() > 0) {
    // nearest candidate is 0
    return x.to_double();
  }
  return distance_to_integer(x);
}

double distance_to_integer(const BigReal& x) { return abs(x - round(x)).to_double(); }

BigReal gamma(const BigReal& x) {
  check_gamma_pole(x, "gamma");
  BigReal r(x.precision());
  mpfr_gamma(r.get(), x.get(), kRnd);
  return r;
}

BigReal digamma(const BigReal& x) {
  check_gamma_pole(x, "digamma");
  BigReal r(x.precision());
  mpfr_digamma(r.get(), x.get(), kRnd);
  return r;
}

BigReal trig_pi(TrigKind kind, const BigReal& x) {
  const long p = x.precision();
  if (kind == TrigKind::cot && distance_to_integer(x) < kPoleGuard) {
    throw PoleError("cot_pi: argument " + x.to_string(20) + " is within 1e-6 of an integer");
  }
  // x = n + r with |r| <= 1/2, both exact.
  const BigReal n = round(x);
  const BigReal r = x - n;
  const bool odd = mpfr_integer_p(ldexp(n, -1).get()) == 0;
  const bool half = abs(r) == BigReal(0.5, 8);
  if (kind == TrigKind::sin && r.is_zero()) return BigReal(0L, p);
  if (kind != TrigKind::sin && half) return BigReal(0L, p);
  const long wp = p + 32;
  BigReal angle = pi(wp) * r.with_precision(wp);
  BigReal out(wp);
  switch (kind) {
    case TrigKind::sin:
      mpfr_sin(out.get(), angle.get(), kRnd);
      break;
    case TrigKind::cos:
      mpfr_cos(out.get(), angle.get(), kRnd);
      break;
    case TrigKind::cot:
      mpfr_cot(out.get(), angle.get(), kRnd);
      return out.with_precision(p);
  }
  if (odd) out = -out;
  return out.with_precision(p);
}

BigReal zeta_value(unsigned n, long precision_bits) {
  if (n < 2) throw DomainError("zeta_value: n must be >= 2");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, long>, BigReal> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, precision_bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigReal z(precision_bits);
  mpfr_zeta_ui(z.get(), n, kRnd);
  cache.emplace(key, z);
  return z;
}

BigReal euler_gamma(long precision_bits) {
  static std::mutex mutex;
  static std::map<long, BigReal> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(precision_bits);
  if (it != cache.end()) return it->second;
  BigReal g(precision_bits);
  mpfr_const_euler(g.get(), kRnd);
  cache.emplace(precision_bits, g);
  return g;
}

BigReal hurwitz_zeta(const BigReal& s, const BigReal& a) {
  const long p = std::min(s.precision(), a.precision());
  if (!(s > 1L)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(a > 0L)) throw DomainError("hurwitz_zeta: a must be positive");
  const long wp = p + 32;
  const BigReal sw = s.with_precision(wp);
  BigReal x = a.with_precision(wp);
  BigReal sum(0L, wp);

  // Shift the Euler–Maclaurin evaluation point far enough out that the
  // Bernoulli remainder is far below 2^-wp.
  const double x_min = std::max(24.0, 0.4 * static_cast<double>(wp)) + std::abs(s.to_double());
  while (x.to_double() < x_min) {
    sum += pow(x, -sw);
    x += 1L;
  }

  sum += pow(x, 1L - sw) / (sw - 1L);
  BigReal x_pow = pow(x, -sw);  // x^(-s)
  sum += ldexp(x_pow, -1);

  const BigReal eps = exp2_int(-wp - 8, wp);
  const BigReal x2 = x * x;
  BigReal rising = sw;     // s (s+1) ... (s+2j-2)
  BigReal x_term = x_pow / x;  // x^(-s-2j+1) for j = 1
  mpz_class fact2j = 2;       // (2j)!
  BigReal prev_mag(0L, wp);
  for (unsigned j = 1;; ++j) {
    BigReal term = to_big_real(bernoulli(2 * j) / Rational(fact2j), wp) * rising * x_term;
    BigReal mag = abs(term);
    if (j > 2 && mag > prev_mag) {
      throw ConvergenceError("hurwitz_zeta: asymptotic remainder started to grow", mag.to_double());
    }
    sum += term;
    if (mag < eps * abs(sum)) break;
    prev_mag = mag;
    rising *= sw + static_cast<long>(2 * j - 1);
    rising *= sw + static_cast<long>(2 * j);
    x_term /= x2;
    fact2j *= (2 * j + 1) * (2 * j + 2);
  }
  return sum.with_precision(p);
}

}  // namespace mzstar
