#include "mzstar/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace mzstar {
namespace {

std::mutex g_mutex;
// deque keeps references stable while the table grows.
std::deque<Rational> g_table;
std::vector<Rational> g_work;

// Akiyama–Tanigawa produces B_n with B_1 = +1/2; the sign is fixed below.
void extend_to(unsigned n) {
  for (unsigned m = static_cast<unsigned>(g_table.size()); m <= n; ++m) {
    g_work.emplace_back(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      g_work[j - 1] = j * (g_work[j - 1] - g_work[j]);
    }
    g_table.push_back(m == 1 ? Rational(-1, 2) : g_work[0]);
  }
}

}  // namespace

const Rational& bernoulli(unsigned n) {
  std::lock_guard lock(g_mutex);
  extend_to(n);
  return g_table[n];
}

BigReal bernoulli_polynomial(unsigned n, const BigReal& x) {
  // B_n(x) = sum_k C(n,k) B_k x^(n-k), evaluated by Horner in x.
  long p = x.precision();
  BigReal acc(0L, p);
  mpz_class binom = 1;
  std::vector<Rational> coeff(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    coeff[k] = binom * bernoulli(k);
    binom = binom * (n - k) / (k + 1);
  }
  // coeff[k] multiplies x^(n-k); Horner from k = 0 (highest power).
  for (unsigned k = 0; k <= n; ++k) {
    acc *= x;
    acc += to_big_real(coeff[k], p);
  }
  return acc;
}

}  // namespace mzstar
