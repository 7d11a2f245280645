#include "mzstar/elementary_series.hpp"

#include <vector>

#include "mzstar/error.hpp"

namespace mzstar {
namespace {

void require_zero_constant(const ZetaSeries& x, const char* who) {
  if (!x.constant_term().is_zero()) throw DomainError(std::string(who) + ": argument has a nonzero constant term");
}

// Highest power of x that can survive truncation.
int max_power(const ZetaSeries& x) {
  if (x.is_zero()) return 0;
  return x.order() / x.min_degree();
}

ZetaPoly six_zeta2_pow(unsigned k) {
  ZetaPoly p(1);
  const ZetaPoly six_z2 = ZetaPoly::zeta(2) * Rational(6);
  for (unsigned i = 0; i < k; ++i) p = p * six_z2;
  return p;
}

// Σ_{k>=first} (-1)^k (6ζ(2))^(k-shift) X^k / fact(k), fact(k) = (2k+odd)!.
ZetaSeries even_trig_series(const ZetaSeries& square, unsigned first, unsigned shift, bool odd) {
  const int top = max_power(square);
  std::vector<ZetaPoly> coeffs(top + 1);
  for (int k = static_cast<int>(first); k <= top; ++k) {
    Rational c(1, 1);
    c /= Rational(factorial(2 * k + (odd ? 1 : 0)));
    if (k % 2) c = -c;
    coeffs[k] = six_zeta2_pow(k - shift) * c;
  }
  return compose_univariate(coeffs, square);
}

}  // namespace

ZetaSeries log_gamma_one_minus(const ZetaSeries& x) {
  require_zero_constant(x, "log_gamma_one_minus");
  const int top = max_power(x);
  std::vector<ZetaPoly> coeffs(top + 1);
  if (top >= 1) coeffs[1] = ZetaPoly::gamma();
  for (int n = 2; n <= top; ++n) coeffs[n] = ZetaPoly::zeta(n) * Rational(1, n);
  return compose_univariate(coeffs, x);
}

ZetaSeries elementary_series(ElementaryKind kind, const ZetaSeries& x) {
  require_zero_constant(x, "elementary_series");
  switch (kind) {
    case ElementaryKind::gamma_one_minus:
      return series_exp(log_gamma_one_minus(x));
    case ElementaryKind::inv_gamma_one_plus:
      // log Γ(1+x) = log Γ(1-(-x)), negated.
      return series_exp(-log_gamma_one_minus(-x));
    case ElementaryKind::sin_pi_over_pi:
      return even_trig_series(x * x, 0, 0, true);
    case ElementaryKind::cos_pi:
      return even_trig_series(x, 0, 0, false);
  }
  throw DomainError("elementary_series: unknown kind");
}

ZetaSeries sin_pi_over_pi_reduced(const ZetaSeries& x) {
  require_zero_constant(x, "sin_pi_over_pi_reduced");
  return even_trig_series(x * x, 1, 1, true);
}

ZetaSeries cos_pi_reduced(const ZetaSeries& square) {
  require_zero_constant(square, "cos_pi_reduced");
  return even_trig_series(square, 1, 1, false);
}

}  // namespace mzstar
