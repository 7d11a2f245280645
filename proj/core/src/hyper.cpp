#include "mzstar/hyper.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "mzstar/bernoulli.hpp"
#include "mzstar/error.hpp"
#include "mzstar/special_functions.hpp"

namespace mzstar {

namespace {

bool is_nonpositive_integer(const BigReal& x) { return x.is_integer() && x <= 0L; }

void require_off_pole(const BigReal& x, const std::string& what, double margin = kHyperMargin) {
  if (distance_to_nonpositive_integer(x) < margin) {
    throw PoleError(what + " = " + x.to_string(20) + " is within " + std::to_string(margin) + " of a pole");
  }
}

void require_positive(const BigReal& x, const std::string& what, double margin = kHyperMargin) {
  if (!(x.to_double() > margin)) {
    throw HypothesisError(what + " = " + x.to_string(20) + " must exceed " + std::to_string(margin));
  }
}

long min_precision(const std::vector<BigReal>& xs) {
  long p = 1L << 30;
  for (const auto& x : xs) p = std::min(p, x.precision());
  return p;
}

struct Series {
  std::vector<BigReal> tops;
  std::vector<BigReal> bottoms;

  // t_{n+1} / t_n
  BigReal step(const BigReal& t, long n) const {
    BigReal num = t;
    for (const auto& a : tops) num *= a + n;
    BigReal den(n + 1L, t.precision());
    for (const auto& b : bottoms) den *= b + n;
    return num / den;
  }
};

HyperSum sum_terminating(const Series& s, long wp, long p) {
  BigReal t(1L, wp), sum(0L, wp);
  std::size_t n = 0;
  while (!t.is_zero()) {
    sum += t;
    t = s.step(t, static_cast<long>(n));
    ++n;
  }
  return {sum.with_precision(p), 0.0, n};
}

HyperSum sum_raw(const Series& s, const BigReal& excess, double target, long wp, long p) {
  BigReal t(1L, wp), sum(0L, wp);
  const double e = excess.to_double();
  for (std::size_t n = 0;; ++n) {
    sum += t;
    t = s.step(t, static_cast<long>(n));
    const std::size_t next = n + 1;
    if (next >= 1024 && next % 256 == 0) {
      // terms ~ C n^(-1-e) leave a tail of about |t_n| n / e
      const double est = std::abs(t.to_double()) * static_cast<double>(next) / e;
      if (est <= target) return {sum.with_precision(p), est, next};
      const double at_cap = est * std::pow(static_cast<double>(next) / static_cast<double>(kRawTermCap), e);
      if ((next >= 4096 && at_cap > target) || next >= kRawTermCap) {
        throw ConvergenceError("hyper_unit_sum: raw summation cannot reach " + std::to_string(target) +
                                   " within " + std::to_string(kRawTermCap) + " terms (achievable " +
                                   std::to_string(at_cap) + ")",
                               at_cap);
      }
    }
  }
}

// B_{2j}/(2j)!, grown on demand.
class EvenBernoulli {
 public:
  explicit EvenBernoulli(long wp) : wp_(wp), values_{BigReal(0L, wp)} {}

  const BigReal& operator[](std::size_t j) {
    while (values_.size() <= j) {
      const unsigned k = static_cast<unsigned>(values_.size());
      fact_ *= (2 * k - 1) * (2 * k);
      values_.push_back(to_big_real(bernoulli(2 * k) / Rational(fact_), wp_));
    }
    return values_[j];
  }

 private:
  long wp_;
  std::vector<BigReal> values_;
  mpz_class fact_ = 1;
};

// ζ(σ, X) by Euler–Maclaurin at the evaluation point itself; X must be large
// compared with σ. `x_neg_sigma` is X^(−σ).
BigReal hurwitz_at(const BigReal& sigma, const BigReal& x, const BigReal& x_neg_sigma, EvenBernoulli& b2j,
                   const BigReal& eps) {
  BigReal bracket = x / (sigma - 1L);
  bracket += ldexp(BigReal(1L, x.precision()), -1);
  BigReal rising = sigma;            // (σ)_{2j−1}
  BigReal x_pow = 1L / x;            // X^(1−2j)
  const BigReal inv_x2 = x_pow * x_pow;
  for (std::size_t j = 1; j < 400; ++j) {
    const BigReal term = b2j[j] * rising * x_pow;
    bracket += term;
    if (abs(term) < eps * abs(bracket)) return bracket * x_neg_sigma;
    rising *= sigma + static_cast<long>(2 * j - 1);
    rising *= sigma + static_cast<long>(2 * j);
    x_pow *= inv_x2;
  }
  throw ConvergenceError("hyper_unit_sum: tail Euler–Maclaurin did not converge", 1.0);
}

HyperSum sum_accelerated(const Series& s, const BigReal& excess, double target, long wp, long p) {
  double max_abs = 0;
  for (const auto& a : s.tops) max_abs = std::max(max_abs, std::abs(a.to_double()));
  for (const auto& b : s.bottoms) max_abs = std::max(max_abs, std::abs(b.to_double()));
  const BigReal eps = exp2_int(-wp, wp);
  const BigReal decay = excess + 1L;  // t_n ~ K n^(−decay)

  for (long X = static_cast<long>(std::ceil(0.55 * static_cast<double>(wp) + 16 + 4 * std::ceil(max_abs)));
       static_cast<std::size_t>(X) <= kRawTermCap; X *= 2) {
    BigReal t(1L, wp), head(0L, wp), head_abs(0L, wp);
    for (long n = 0; n < X; ++n) {
      head += t;
      head_abs += abs(t);
      t = s.step(t, n);
    }
    if (t.is_zero()) return {head.with_precision(p), 0.0, static_cast<std::size_t>(X)};

    // log t_n = log K − decay·log n + Σ_k d_k n^(−k) with
    // d_k = (−1)^(k+1)/(k(k+1)) Σ_j C(k+1,j) B_j P_{k+1−j},
    // P_m = Σ tops^m − 1 − Σ bottoms^m.
    const long max_m = 400;
    std::vector<BigReal> top_pow(s.tops.size(), BigReal(1L, wp)), bot_pow(s.bottoms.size(), BigReal(1L, wp));
    std::vector<BigReal> P{BigReal(0L, wp)};
    std::vector<BigReal> B;
    std::vector<BigReal> d{BigReal(0L, wp)}, g{BigReal(1L, wp)};
    const BigReal xw(X, wp);
    const BigReal inv_x = 1L / xw;
    BigReal x_neg_m(1L, wp);
    BigReal expansion(1L, wp);  // Σ g_m X^(−m)
    double last_mag = 1, prev_mag = 1;
    long m = 1;
    for (; m <= max_m; ++m) {
      // P_{m+1} and B_m are needed for d_m
      while (static_cast<long>(P.size()) <= m + 1) {
        BigReal pm(-1L, wp);
        for (std::size_t i = 0; i < s.tops.size(); ++i) pm += (top_pow[i] *= s.tops[i]);
        for (std::size_t i = 0; i < s.bottoms.size(); ++i) pm -= (bot_pow[i] *= s.bottoms[i]);
        P.push_back(pm);
      }
      while (static_cast<long>(B.size()) <= m + 1) B.push_back(to_big_real(bernoulli(B.size()), wp));
      BigReal Dk(0L, wp);
      mpz_class binom = 1;  // C(m+1, j)
      for (long j = 0; j <= m; ++j) {
        if (j <= 1 || j % 2 == 0) {
          BigReal c = B[j] * P[m + 1 - j];
          mpfr_mul_z(c.get(), c.get(), binom.get_mpz_t(), MPFR_RNDN);
          Dk += c;
        }
        binom = binom * (m + 1 - j) / (j + 1);
      }
      Dk /= m * (m + 1L);
      if (m % 2 == 0) Dk = -Dk;
      d.push_back(Dk);

      BigReal gm(0L, wp);
      for (long k = 1; k <= m; ++k) gm += k * (d[k] * g[m - k]);
      gm /= m;
      g.push_back(gm);
      x_neg_m *= inv_x;
      const BigReal term = gm * x_neg_m;
      expansion += term;
      prev_mag = last_mag;
      last_mag = std::abs(term.to_double());
      if (last_mag < eps.to_double() && prev_mag < eps.to_double()) break;
    }
    const double truncation = std::max(last_mag, prev_mag);

    // Σ_{n≥X} t_n = K Σ_m g_m ζ(decay + m, X), K = t_X X^decay / expansion
    EvenBernoulli b2j(wp);
    const BigReal x_neg_decay = pow(xw, -decay);
    BigReal zeta_sum(0L, wp);
    BigReal x_neg_sigma = x_neg_decay;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!g[k].is_zero()) zeta_sum += g[k] * hurwitz_at(decay + static_cast<long>(k), xw, x_neg_sigma, b2j, eps);
      x_neg_sigma *= inv_x;
    }
    const BigReal K = t / (x_neg_decay * expansion);
    const BigReal tail = K * zeta_sum;
    const double err = std::abs(tail.to_double()) * (truncation + eps.to_double()) * 4 +
                       head_abs.to_double() * eps.to_double() * static_cast<double>(X);
    if (err <= target || m <= max_m) {
      if (err > target) {
        throw ConvergenceError("hyper_unit_sum: accelerated tail reached " + std::to_string(err) +
                                   ", target " + std::to_string(target),
                               err);
      }
      return {(head + tail).with_precision(p), err, static_cast<std::size_t>(X)};
    }
  }
  throw ConvergenceError("hyper_unit_sum: tail expansion did not converge below the term cap", 1.0);
}

BigReal sum_to_working(const std::vector<BigReal>& tops, const std::vector<BigReal>& bottoms) {
  const long p = std::min(min_precision(tops), min_precision(bottoms));
  return hyper_unit_sum(tops, bottoms, working_target(p)).value;
}

}  // namespace

BigReal pochhammer(const BigReal& a, long n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  BigReal out(1L, a.precision());
  for (long k = 0; k < n; ++k) out *= a + k;
  return out;
}

double working_target(long precision_bits) { return std::ldexp(1.0, 16 - static_cast<int>(precision_bits)); }

HyperSum hyper_unit_sum(const std::vector<BigReal>& tops, const std::vector<BigReal>& bottoms, double target_abs_err,
                        SumMethod method) {
  if (tops.size() != bottoms.size() + 1) throw DomainError("hyper_unit_sum: need p = q + 1 parameters");
  const long p = std::min(min_precision(tops), min_precision(bottoms));
  const long wp = p + 48;
  Series s;
  for (const auto& a : tops) s.tops.push_back(a.with_precision(wp));
  for (const auto& b : bottoms) {
    if (distance_to_nonpositive_integer(b) < kPoleGuard) {
      throw PoleError("hyper_unit_sum: bottom parameter " + b.to_string(20) + " is near a nonpositive integer");
    }
    s.bottoms.push_back(b.with_precision(wp));
  }
  if (std::any_of(s.tops.begin(), s.tops.end(), is_nonpositive_integer)) return sum_terminating(s, wp, p);

  BigReal excess(0L, wp);
  for (const auto& b : s.bottoms) excess += b;
  for (const auto& a : s.tops) excess -= a;
  if (!(excess > 0L)) {
    throw HypothesisError("hyper_unit_sum: convergence excess " + excess.to_string(10) + " is not positive");
  }
  if (method == SumMethod::raw) return sum_raw(s, excess, target_abs_err, wp, p);
  return sum_accelerated(s, excess, target_abs_err, wp, p);
}

BigReal HyperParams32::excess() const { return bottoms[0] + bottoms[1] - tops[0] - tops[1] - tops[2]; }

long HyperParams32::precision() const {
  long p = bottoms[0].precision();
  for (const auto& x : tops) p = std::min(p, x.precision());
  return std::min(p, bottoms[1].precision());
}

std::vector<std::pair<std::string, BigReal>> HyperParams32::named() const {
  return {{"a1", tops[0]}, {"a2", tops[1]}, {"a3", tops[2]}, {"b1", bottoms[0]}, {"b2", bottoms[1]}};
}

BigReal f21_unit_gauss(const BigReal& a, const BigReal& b, const BigReal& c) {
  const BigReal excess = c - a - b;
  if (!(excess.to_double() > kPoleGuard)) throw HypothesisError("f21_unit_gauss: c - a - b = " + excess.to_string(10) + " must be positive");
  if (distance_to_nonpositive_integer(c) < kPoleGuard) throw PoleError("f21_unit_gauss: c is a pole");
  if (a.is_zero() || b.is_zero()) return BigReal(1L, std::min({a.precision(), b.precision(), c.precision()}));
  return gamma(c) * gamma(excess) / (gamma(c - a) * gamma(c - b));
}

BigReal f21_unit_direct(const BigReal& a, const BigReal& b, const BigReal& c, double target_abs_err, SumMethod method) {
  return hyper_unit_sum({a, b}, {c}, target_abs_err, method).value;
}

BigReal f32_unit_direct(const HyperParams32& p, double target_abs_err, SumMethod method) {
  return hyper_unit_sum({p.tops.begin(), p.tops.end()}, {p.bottoms.begin(), p.bottoms.end()}, target_abs_err, method)
      .value;
}

BigReal f32_term_ratio(const HyperParams32& p, long n) {
  const BigReal num = (p.tops[0] + n) * (p.tops[1] + n) * (p.tops[2] + n);
  return num / ((p.bottoms[0] + n) * (p.bottoms[1] + n) * (n + 1L));
}

VerificationReport gauss_check(const BigReal& a, const BigReal& b, const BigReal& c, double tolerance) {
  const long p = std::min({a.precision(), b.precision(), c.precision()});
  const BigReal direct = f21_unit_direct(a, b, c, working_target(p));
  return make_report("gauss", {{"a", a}, {"b", b}, {"c", c}}, direct, f21_unit_gauss(a, b, c), tolerance);
}

VerificationReport trans_check_two(const HyperParams32& p, double tolerance) {
  const auto& [a1, a2, a3] = p.tops;
  const auto& [b1, b2] = p.bottoms;
  const BigReal e = p.excess();
  require_positive(e, "excess");
  require_positive(a3 - b1 + 1L, "a3 - b1 + 1");
  const BigReal s12 = b1 + b2 - a1 - a2;
  const BigReal d = b1 - a1 - a2;
  require_off_pole(b1, "b1");
  require_off_pole(b2, "b2");
  require_off_pole(d, "b1 - a1 - a2");
  require_off_pole(-d, "a1 + a2 - b1");
  require_off_pole(b1 - a1, "b1 - a1");
  require_off_pole(b1 - a2, "b1 - a2");
  require_off_pole(a1, "a1");
  require_off_pole(a2, "a2");
  require_off_pole(b2 - a3, "b2 - a3");
  require_off_pole(s12, "b1 + b2 - a1 - a2");
  require_off_pole(1L - d, "a1 + a2 - b1 + 1");
  require_off_pole(d + 1L, "b1 - a1 - a2 + 1");

  const BigReal lhs = f32_unit_direct(p, working_target(p.precision()));
  const BigReal first = gamma(b1) * gamma(d) / (gamma(b1 - a1) * gamma(b1 - a2)) *
                        sum_to_working({a1, a2, b2 - a3}, {1L - d, b2});
  const BigReal second = gamma(b1) * gamma(b2) * gamma(-d) * gamma(e) /
                         (gamma(a1) * gamma(a2) * gamma(b2 - a3) * gamma(s12)) *
                         sum_to_working({b1 - a1, b1 - a2, e}, {d + 1L, s12});
  return make_report("trans2", p.named(), lhs, first + second, tolerance);
}

VerificationReport trans_check_one(const HyperParams32& p, double tolerance) {
  const auto& [a1, a2, a3] = p.tops;
  const auto& [b1, b2] = p.bottoms;
  const BigReal s12 = b1 + b2 - a1 - a2;
  const BigReal e = s12 - a3;
  require_positive(e, "excess");
  require_positive(b2 - a3, "b2 - a3");
  require_off_pole(b1, "b1");
  require_off_pole(b2, "b2");
  require_off_pole(s12, "b1 + b2 - a1 - a2");

  const BigReal lhs = f32_unit_direct(p, working_target(p.precision()));
  const BigReal rhs = gamma(b2) * gamma(e) / (gamma(b2 - a3) * gamma(s12)) * sum_to_working({b1 - a1, b1 - a2, a3}, {b1, s12});
  return make_report("trans1", p.named(), lhs, rhs, tolerance);
}

namespace {

void prop31_guards(const BigReal& a, const BigReal& b, const BigReal& c) {
  for (const auto* x : {&a, &b, &c}) {
    if (abs(*x).to_double() > 0.25) throw HypothesisError("prop31: |a|, |b|, |c| must not exceed 1/4");
  }
  require_off_pole(a, "a");
  require_off_pole(b, "b");
  require_off_pole(a + b, "a + b");
  require_off_pole(1L + c - a, "1 + c - a");
  require_off_pole(1L + c - b, "1 + c - b");
  require_off_pole(1L + c - a - b, "1 + c - a - b");
}

// Σ_{n≥1} (x)_n (1−b)_n / ((n+ε) n! (1+c−b)_n), shifted to start at n = 0.
BigReal prop31_aux_sum(const BigReal& x, const BigReal& b, const BigReal& c, const BigReal& eps) {
  const long p = x.precision();
  const BigReal lead = x * (1L - b) / ((1L + c - b) * (1L + eps));
  return lead * sum_to_working({x + 1L, 2L - b, 1L + eps, BigReal(1L, p)}, {2L + c - b, BigReal(2L, p), 2L + eps});
}

}  // namespace

BigReal prop31_closed_form(const BigReal& a, const BigReal& b, const BigReal& c) {
  prop31_guards(a, b, c);
  const long p = std::min({a.precision(), b.precision(), c.precision()});
  const BigReal prefactor = gamma(a + b) * gamma(1L + c) * gamma(1L + c - a - b) /
                            (gamma(a) * gamma(b) * gamma(1L + c - a) * gamma(1L + c - b));
  const BigReal aux = prop31_aux_sum(a, b, c, BigReal(0L, p));
  return prefactor * (digamma(1L + c - b) - digamma(a) - digamma(b) - euler_gamma(p) - aux);
}

VerificationReport prop31_check(const BigReal& a, const BigReal& b, const BigReal& c, double tolerance) {
  prop31_guards(a, b, c);
  const long p = std::min({a.precision(), b.precision(), c.precision()});
  const BigReal lhs = hyper_unit_sum({a, b, c}, {a + b, 1L + c}, working_target(p)).value;
  return make_report("prop31", {{"a", a}, {"b", b}, {"c", c}}, lhs, prop31_closed_form(a, b, c), tolerance);
}

EpsilonProbe prop31_epsilon_probe(const BigReal& a, const BigReal& b, const BigReal& c, const BigReal& eps,
                                  double tolerance) {
  prop31_guards(a, b, c);
  const double e = std::abs(eps.to_double());
  if (!(e >= 1e-6 && e <= 1e-2)) throw HypothesisError("prop31_epsilon_probe: need 1e-6 <= |eps| <= 1e-2");
  if (10 * e > std::abs((a + b).to_double())) {
    throw HypothesisError("prop31_epsilon_probe: need |eps| <= |a+b|/10 (f(eps) is singular at eps = -(a+b))");
  }
  const long p = std::min({a.precision(), b.precision(), c.precision(), eps.precision()});
  const auto direct = [&](const BigReal& x) {
    return hyper_unit_sum({a, b, c}, {a + b + x, 1L + c - x}, working_target(p)).value;
  };

  const BigReal f = direct(eps);
  const BigReal common = gamma(a + b + eps) * gamma(1L + c - eps) * gamma(1L + c - a - b - eps) / gamma(1L + c - a - eps);
  const BigReal g1 = gamma(1L + eps) * common / (gamma(a + eps) * gamma(b + eps) * gamma(1L + c - b - eps));
  const BigReal g2 = common / (gamma(a) * gamma(b) * gamma(1L + c - b));
  const BigReal decomposed = (g1 - g2) / eps - g2 * prop31_aux_sum(a + eps, b, c, eps);

  std::vector<std::pair<std::string, BigReal>> inputs{{"a", a}, {"b", b}, {"c", c}, {"eps", eps}};
  EpsilonProbe out{make_report("prop31-eps", inputs, f, decomposed, tolerance), {}};

  const BigReal extrapolated = 2L * direct(ldexp(eps, -1)) - f;
  out.richardson = make_report("prop31-richardson", inputs, extrapolated, prop31_closed_form(a, b, c), e);
  out.richardson.notes.push_back("2 f(eps/2) - f(eps) against the closed form");
  return out;
}

BigReal HyperSampler::draw(double lo, double hi) { return BigReal(rng_.uniform(lo, hi), precision_bits_); }

std::array<BigReal, 3> HyperSampler::gauss() {
  BigReal a = draw(-0.25, 0.25), b = draw(-0.25, 0.25);
  BigReal c = draw(0.75, 1.5);
  return {a, b, c};
}

namespace {

bool trans_point_ok(const HyperParams32& p, bool two) {
  constexpr double margin = 1e-2;
  const auto off = [&](const BigReal& x) { return distance_to_nonpositive_integer(x) >= margin; };
  const auto& [a1, a2, a3] = p.tops;
  const auto& [b1, b2] = p.bottoms;
  const BigReal s12 = b1 + b2 - a1 - a2;
  const BigReal d = b1 - a1 - a2;
  if (p.excess().to_double() < margin) return false;
  if (!off(b1) || !off(b2) || !off(s12)) return false;
  if (two) {
    return (a3 - b1 + 1L).to_double() >= margin && off(d) && off(-d) && off(b1 - a1) && off(b1 - a2) && off(a1) &&
           off(a2) && off(b2 - a3) && off(1L - d) && off(d + 1L);
  }
  return (b2 - a3).to_double() >= margin;
}

}  // namespace

HyperParams32 HyperSampler::trans_two() {
  for (;;) {
    HyperParams32 p{{draw(-0.4, 0.6), draw(-0.4, 0.6), draw(-0.4, 0.6)}, {draw(0.5, 1.3), draw(0.5, 1.6)}};
    if (trans_point_ok(p, true)) return p;
  }
}

HyperParams32 HyperSampler::trans_one() {
  for (;;) {
    HyperParams32 p{{draw(-0.4, 0.6), draw(-0.4, 0.6), draw(-0.4, 0.6)}, {draw(0.5, 1.3), draw(0.5, 1.6)}};
    if (trans_point_ok(p, false)) return p;
  }
}

std::array<BigReal, 3> HyperSampler::prop31() {
  for (;;) {
    std::array<BigReal, 3> abc{draw(-0.25, 0.25), draw(-0.25, 0.25), draw(-0.25, 0.25)};
    try {
      prop31_guards(abc[0], abc[1], abc[2]);
      return abc;
    } catch (const DomainError&) {
    }
  }
}

const std::vector<std::string>& hyper_check_names() {
  static const std::vector<std::string> names{"gauss", "trans2", "trans1", "prop31"};
  return names;
}

std::vector<VerificationReport> run_hyper_check(const std::string& name, std::size_t samples, std::uint64_t seed,
                                                long precision_bits, double tolerance) {
  HyperSampler sampler(seed, precision_bits);
  std::vector<VerificationReport> out;
  if (name == "gauss") {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto [a, b, c] = sampler.gauss();
      out.push_back(gauss_check(a, b, c, tolerance));
    }
  } else if (name == "trans2") {
    for (std::size_t i = 0; i < samples; ++i) out.push_back(trans_check_two(sampler.trans_two(), tolerance));
  } else if (name == "trans1") {
    for (std::size_t i = 0; i < samples; ++i) out.push_back(trans_check_one(sampler.trans_one(), tolerance));
  } else if (name == "prop31") {
    std::vector<std::array<BigReal, 3>> pts;
    for (std::size_t i = 0; i < samples; ++i) pts.push_back(sampler.prop31());
    for (const auto& [a, b, c] : pts) out.push_back(prop31_check(a, b, c, tolerance));
    // probe points need |a+b| >= 0.1 so that both ε values sit inside the expansion radius
    std::size_t probes = 0;
    for (std::size_t i = 0; i < pts.size() && probes < std::min<std::size_t>(samples, 5); ++i) {
      const auto& [a, b, c] = pts[i];
      if (std::abs((a + b).to_double()) < 0.1) continue;
      ++probes;
      for (const char* eps : {"0.01", "0.001"}) {
        EpsilonProbe probe = prop31_epsilon_probe(a, b, c, BigReal(eps, precision_bits));
        out.push_back(std::move(probe.decomposition));
        out.push_back(std::move(probe.richardson));
      }
    }
  } else {
    throw DomainError("run_hyper_check: unknown check '" + name + "'");
  }
  sort_reports(out);
  return out;
}

}  // namespace mzstar
