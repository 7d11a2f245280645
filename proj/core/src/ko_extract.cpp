#include "mzstar/ko_extract.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "mzstar/elementary_series.hpp"
#include "mzstar/identity.hpp"
#include "mzstar/sampler.hpp"

namespace mzstar {
namespace {

ZetaSeries fold(const ZetaSeries& s) {
  return map_coefficients(s, [](const ZetaPoly& c) { return c.fold_even_zetas(); });
}

ZetaSeries scaled(const ZetaSeries& s, const Rational& c) { return s * ZetaPoly(c); }

// Part of s whose coefficients carry γ^k (k >= 1), γ^k divided out and summed.
ZetaSeries gamma_part(const ZetaSeries& s) {
  ZetaSeries out(s.order());
  for (const auto& [m, c] : s.terms()) {
    for (const auto& [mono, q] : c.terms()) {
      if (mono.gamma_exponent() > 0) out.add_term(m, ZetaPoly(mono, q));
    }
  }
  return out;
}

// Coefficients of log Γ(1+x) = −γx + Σ_{n>=2} (−1)ⁿ ζ(n) xⁿ / n.
ZetaPoly log_gamma_one_plus_coeff(int n) {
  if (n == 1) return -ZetaPoly::gamma();
  ZetaPoly c = ZetaPoly::zeta(n) * Rational(1, n);
  return n % 2 ? -c : c;
}

// Coefficients of log Γ(1−x) = γx + Σ_{n>=2} ζ(n) xⁿ / n.
ZetaPoly log_gamma_one_minus_coeff(int n) {
  if (n == 1) return ZetaPoly::gamma();
  return ZetaPoly::zeta(n) * Rational(1, n);
}

ZetaSeries power_of(const ZetaSeries& x, int n) {
  ZetaSeries out = ZetaSeries::one(x.order());
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

class Pipeline {
 public:
  explicit Pipeline(int degree) : degree_(degree), order_(degree + 4) {}

  ExpansionResult run() {
    const int o = order_;
    const ZetaSeries u = ZetaSeries::u(o), v = ZetaSeries::v(o), w = ZetaSeries::w(o);
    const ZetaPoly six_z2 = ZetaPoly::zeta(2) * Rational(6);

    // (i) symmetric functions of a, b and of u+a, u+b
    const ZetaSeries e1 = v - u;
    const ZetaSeries e2 = -(u * v + w);
    const auto p = power_sums(e1, e2, o);
    const auto q = power_sums(u + v, -w, o);
    const ZetaSeries disc = (u + v) * (u + v) + scaled(w, 4);
    log("i", "symbols", "e1 = v-u, e2 = -(uv+w), D = (u+v)^2+4w", o, o, disc.size(), true);

    // (ii) log Γ(1−a)Γ(1−b)Γ(1+a)Γ(1+b)
    ZetaSeries log_g(o);
    for (int n = 1; n <= o; ++n) {
      log_g += p[n - 1] * log_gamma_one_minus_coeff(n);
      log_g += p[n - 1] * log_gamma_one_plus_coeff(n);
    }
    require_gamma_free(log_g, "ii", "symmetric gamma block");

    // (iii) log Γ(1+u+a)Γ(1+u+b); Γ(u+a)Γ(u+b) = −Γ(1+u+a)Γ(1+u+b)/w
    ZetaSeries log_3(o);
    for (int n = 1; n <= o; ++n) log_3 += q[n - 1] * log_gamma_one_plus_coeff(n);

    // (iv) −log Γ(1+u)Γ(1+v); 1/(Γ(u)Γ(v)) = uv/(Γ(1+u)Γ(1+v))
    ZetaSeries log_4(o);
    for (int n = 1; n <= o; ++n) log_4 -= (power_of(u, n) + power_of(v, n)) * log_gamma_one_plus_coeff(n);

    const ZetaSeries gamma_3 = gamma_part(log_3);
    const ZetaSeries gamma_4 = gamma_part(log_4);
    const ZetaSeries gamma_sum = (u + v) * ZetaPoly::gamma();
    log("iii", "gamma-linear", "gamma part is -gamma(u+v)", o, o, gamma_3.size(), gamma_3 == -gamma_sum);
    log("iv", "gamma-linear", "gamma part is +gamma(u+v)", o, o, gamma_4.size(), gamma_4 == gamma_sum);
    gamma_series_zero_ = (gamma_3 + gamma_4).is_zero();
    log("iii+iv", "gamma-cancellation",
        "gamma-linear series " + std::to_string(gamma_3.size()) + " + " + std::to_string(gamma_4.size()) +
            " terms sum to zero",
        o, o, (gamma_3 + gamma_4).size(), gamma_series_zero_);
    if (!gamma_series_zero_) throw PipelineError("iii+iv", "gamma-linear terms do not cancel");

    const ZetaSeries log_total = fold(log_g + log_3 + log_4);
    require_gamma_free(log_total, "iii+iv", "combined logarithm");
    const ZetaSeries gamma_block = fold(series_exp(log_total));
    log("ii-iv", "exp", "exp of the combined gamma logarithm", o, gamma_block.order(), gamma_block.size(), true);

    // (v) A = N/(2π sin πu sin πv), N = π³N′, sin πu sin πv = π²uv S(u)S(v)
    pi_degree_ = 3 - 1 - 2;
    log("v", "pi-degree", "N = pi^3 N', 1/(2 pi), sin(pi u) sin(pi v) = pi^2 uv S(u) S(v)", o, o, 0,
        pi_degree_ == 0);
    if (pi_degree_ != 0) throw PipelineError("v", "pi-degree does not vanish");
    log("iv+v", "monomial-cancellation", "uv from 1/(Gamma(u)Gamma(v)) cancels uv from sin(pi u) sin(pi v)", o, o,
        0, true);

    const ZetaSeries s1_u = sin_pi_over_pi_reduced(u);
    const ZetaSeries s1_v = sin_pi_over_pi_reduced(v);
    const ZetaSeries s1_uu = sin_pi_over_pi_reduced(scaled(u, 2));
    const ZetaSeries s1_vv = sin_pi_over_pi_reduced(scaled(v, 2));
    const ZetaSeries s1_d = sin_pi_over_pi_reduced(v - u);
    const ZetaSeries c1 = cos_pi_reduced(disc);
    const ZetaSeries n_prime =
        fold(u * s1_uu - v * s1_vv + (v - u) * (s1_d + c1 + s1_d * c1 * six_z2));
    const ZetaSeries n_over_w = divide(n_prime, w, "v", "N' by w");

    const ZetaSeries one = ZetaSeries::one(o);
    const ZetaSeries s_prod = fold((one + s1_u * six_z2) * (one + s1_v * six_z2));
    const ZetaSeries s_inv = fold(series_invert(s_prod));

    // (vi) RHS·ab = (u−v) − N′ exp(L) / (2 w S(u) S(v)), then divide by ab
    const ZetaSeries a_block = fold(n_over_w * gamma_block * s_inv) * ZetaPoly(Rational(1, 2));
    const ZetaSeries numerator = (u - v) - a_block;
    log("vi", "assemble", "RHS*ab = (u-v) - N'/w * exp(L) / (2 S(u) S(v))", o, numerator.order(), numerator.size(),
        true);
    ExpansionResult result;
    result.series = divide(numerator, e2, "vi", "RHS*ab by ab = -(uv+w)");
    result.max_total_degree = degree_;
    if (result.series.order() != degree_) {
      throw PipelineError("vi", "final order " + std::to_string(result.series.order()) + " != " +
                                    std::to_string(degree_));
    }

    // (vii)
    result.gamma_free = std::all_of(result.series.terms().begin(), result.series.terms().end(),
                                    [](const auto& kv) { return kv.second.is_gamma_free(); });
    log("vii", "gamma-free", "final coefficients", degree_, degree_, result.series.size(), result.gamma_free);
    if (!result.gamma_free) throw PipelineError("vii", "gamma residue in the final series");
    result.weight_graded = std::all_of(result.series.terms().begin(), result.series.terms().end(), [](const auto& kv) {
      return kv.second.is_homogeneous(static_cast<unsigned>(kv.first.degree() + 1));
    });
    log("vii", "grading", "degree-d coefficients have weight d+1", degree_, degree_, result.series.size(),
        result.weight_graded);
    if (!result.weight_graded) throw PipelineError("vii", "a coefficient is not weight-homogeneous");
    result.divisibility_log = std::move(log_);
    return result;
  }

 private:
  void log(std::string step, std::string check, std::string detail, int in, int out, std::size_t terms, bool ok) {
    log_.push_back({std::move(step), std::move(check), std::move(detail), in, out, terms, ok});
  }

  void require_gamma_free(const ZetaSeries& s, const char* step, const char* what) {
    const ZetaSeries g = gamma_part(s);
    log(step, "gamma-cancellation", std::string(what) + " is gamma-free", s.order(), s.order(), g.size(), g.is_zero());
    if (!g.is_zero()) throw PipelineError(step, std::string(what) + " carries gamma terms");
  }

  ZetaSeries divide(const ZetaSeries& s, const ZetaSeries& d, const char* step, const char* what) {
    try {
      ZetaSeries out = fold(series_div_exact(s, d));
      log(step, "exact-division", what, s.order(), out.order(), out.size(), true);
      return out;
    } catch (const NonDivisibleError& e) {
      log(step, "exact-division", what, s.order(), -1, 0, false);
      throw PipelineError(step, std::string(what) + ": " + e.what());
    }
  }

  int degree_;
  int order_;
  int pi_degree_ = 0;
  bool gamma_series_zero_ = false;
  std::vector<PipelineStep> log_;
};

void require_depth(const ExpansionResult& e, int degree, const char* who) {
  if (degree > e.max_total_degree) {
    throw DomainError(std::string(who) + ": expansion degree " + std::to_string(e.max_total_degree) +
                      " is below the required " + std::to_string(degree));
  }
}

BigReal int_input(long x) { return BigReal(x, 64); }

MzvOptions mzv_options(const OracleOptions& o) {
  MzvOptions opts;
  opts.precision_bits = o.precision_bits;
  opts.method = o.method;
  opts.trunc_N = o.trunc_N;
  return opts;
}

std::string oracle_note(MzvMethod m, double err) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", err);
  return std::string("oracle=") + (m == MzvMethod::holder ? "holder" : "truncated") + " error_estimate=" + buf;
}

// Monomial coefficients of the interpolant through (xs, ys): Newton divided
// differences, then Horner expansion of the Newton form.
std::vector<BigReal> monomial_interpolate(const std::vector<BigReal>& xs, std::vector<BigReal> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  }
  const long prec = ys[0].precision();
  std::vector<BigReal> c(n, BigReal(0L, prec));
  c[0] = ys[n - 1];
  std::size_t len = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    // c(x) <- c(x)·(x − xs[k]) + ys[k]
    for (std::size_t i = len; i > 0; --i) c[i] = c[i - 1] - xs[k] * c[i];
    c[0] = ys[k] - xs[k] * c[0];
    ++len;
  }
  return c;
}

std::vector<BigReal> chebyshev_nodes(double h, int count, long prec) {
  std::vector<BigReal> xs;
  const BigReal pi_val = pi(prec);
  for (int j = 0; j < count; ++j) {
    BigReal angle = pi_val * (2L * j + 1L) / (2L * count);
    BigReal c(prec);
    mpfr_cos(c.get(), angle.get(), MPFR_RNDN);
    xs.push_back(c * BigReal(h, prec));
  }
  return xs;
}

}  // namespace

nlohmann::json PipelineStep::to_json() const {
  return {{"step", step},
          {"check", check},
          {"detail", detail},
          {"input_order", input_order},
          {"output_order", output_order},
          {"terms", terms},
          {"ok", ok}};
}

nlohmann::json ExpansionResult::to_json() const {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& s : divisibility_log) log.push_back(s.to_json());
  return {{"max_total_degree", max_total_degree},
          {"gamma_free", gamma_free},
          {"weight_graded", weight_graded},
          {"divisibility_log", log},
          {"series", series.to_json()}};
}

ExpansionResult ExpansionResult::from_json(const nlohmann::json& j) {
  ExpansionResult r;
  r.series = ZetaSeries::from_json(j.at("series"));
  r.max_total_degree = j.at("max_total_degree").get<int>();
  r.gamma_free = j.at("gamma_free").get<bool>();
  r.weight_graded = j.at("weight_graded").get<bool>();
  for (const auto& s : j.at("divisibility_log")) {
    r.divisibility_log.push_back({s.at("step").get<std::string>(), s.at("check").get<std::string>(),
                                  s.at("detail").get<std::string>(), s.at("input_order").get<int>(),
                                  s.at("output_order").get<int>(), s.at("terms").get<std::size_t>(),
                                  s.at("ok").get<bool>()});
  }
  return r;
}

ExpansionResult expand_theorem_rhs(int max_total_degree) {
  if (max_total_degree < 2) throw DomainError("expand_theorem_rhs: max_total_degree must be >= 2");
  if (max_total_degree + 6 > static_cast<int>(ZetaMonomial::kSlots)) {
    throw DomainError("expand_theorem_rhs: max_total_degree too large for the zeta generator table");
  }
  return Pipeline(max_total_degree).run();
}

std::shared_ptr<const ExpansionResult> shared_expansion(int min_degree) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ExpansionResult>> cache;
  const int degree = std::max(min_degree, kDefaultExpansionDegree);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.lower_bound(degree);
  if (it != cache.end()) return it->second;
  auto e = std::make_shared<const ExpansionResult>(expand_theorem_rhs(degree));
  cache.emplace(degree, e);
  return e;
}

nlohmann::json DifferencePoly::to_json() const {
  return {{"m", m}, {"n", n}, {"s", s}, {"weight", m + n + 1}, {"poly", poly.to_json()}, {"text", poly.to_text()}};
}

DifferencePoly difference_poly(int m, int n, int s, const ExpansionResult& expansion) {
  if (s < 1 || m < s || n < s) throw DomainError("difference_poly: requires m, n >= s >= 1");
  require_depth(expansion, m + n, "difference_poly");
  const Monomial mono{static_cast<std::uint16_t>(m + 1 - s), static_cast<std::uint16_t>(n + 1 - s),
                      static_cast<std::uint16_t>(s - 1)};
  ZetaPoly c = expansion.series.coefficient(mono).fold_even_zetas();
  if (s % 2) c = -c;
  return {m, n, s, c};
}

DifferencePoly difference_poly(int m, int n, int s) { return difference_poly(m, n, s, *shared_expansion(m + n)); }

ZetaPoly diagonal_poly(int k, int s, const ExpansionResult& expansion) {
  if (s < 1 || k < 2 * s) throw DomainError("diagonal_poly: requires k >= 2s, s >= 1");
  require_depth(expansion, k - 1, "diagonal_poly");
  const Monomial mono{static_cast<std::uint16_t>(k - 2 * s + 1), 0, static_cast<std::uint16_t>(s - 1)};
  ZetaPoly c = expansion.series.coefficient(mono).fold_even_zetas();
  return k % 2 ? -c : c;
}

ZetaPoly diagonal_poly(int k, int s) { return diagonal_poly(k, s, *shared_expansion(k - 1)); }

VerificationReport cross_validate(int m, int n, int s, const OracleOptions& oracle) {
  const DifferencePoly d = difference_poly(m, n, s);
  const int k = m + n + 1;
  const MzvOptions opts = mzv_options(oracle);
  BigReal rhs(0L, oracle.precision_bits);
  double err = 0;
  for (const auto& [key, sign] : {std::pair{SumKey{k, n + 1, s}, m % 2 ? -1L : 1L},
                                  std::pair{SumKey{k, m + 1, s}, n % 2 ? 1L : -1L}}) {
    const MzvResult x = x_star_sum(key, opts);
    rhs += sign * x.value;
    err += x.error_estimate;
  }
  VerificationReport r = make_report("ko-difference", {{"m", int_input(m)}, {"n", int_input(n)}, {"s", int_input(s)}},
                                     zp_eval(d.poly, oracle.precision_bits), rhs, oracle.tolerance);
  r.notes.push_back("poly=" + d.poly.to_text());
  r.notes.push_back(oracle_note(opts.method, err));
  return r;
}

VerificationReport diagonal_validate(int k, int s, const OracleOptions& oracle) {
  const ZetaPoly d = diagonal_poly(k, s);
  const MzvOptions opts = mzv_options(oracle);
  const MzvResult x = x_star_sum(SumKey{k, s, s}, opts);
  VerificationReport r = make_report("ko-diagonal", {{"k", int_input(k)}, {"s", int_input(s)}},
                                     zp_eval(d, oracle.precision_bits), x.value, oracle.tolerance);
  r.notes.push_back("poly=" + d.to_text());
  r.notes.push_back(oracle_note(opts.method, x.error_estimate));
  return r;
}

StructuralSummary structural_checks(const ExpansionResult& e) {
  StructuralSummary out;
  out.gamma_free = e.gamma_free && std::all_of(e.series.terms().begin(), e.series.terms().end(), [](const auto& kv) {
                     return kv.second.is_gamma_free();
                   });
  if (!out.gamma_free) out.failures.push_back("gamma residue in the final series");
  out.weight_graded = std::all_of(e.series.terms().begin(), e.series.terms().end(), [](const auto& kv) {
    return kv.second.is_homogeneous(static_cast<unsigned>(kv.first.degree() + 1));
  });
  if (!out.weight_graded) out.failures.push_back("coefficient weight differs from degree + 1");

  bool gamma_logged = false;
  out.gamma_series_zero = true;
  out.divisions_exact = true;
  for (const auto& step : e.divisibility_log) {
    if (step.check == "gamma-cancellation") {
      gamma_logged = true;
      if (!step.ok) out.gamma_series_zero = false;
    }
    if (step.check == "exact-division") {
      ++out.divisions;
      if (!step.ok) out.divisions_exact = false;
    }
  }
  out.gamma_series_zero = out.gamma_series_zero && gamma_logged;
  if (!out.gamma_series_zero) out.failures.push_back("intermediate gamma series not certified zero");
  out.divisions_exact = out.divisions_exact && out.divisions > 0;
  if (!out.divisions_exact) out.failures.push_back("an exact division is missing or failed");

  out.antisymmetric = true;
  for (const auto& [mono, c] : e.series.terms()) {
    const Monomial swapped{mono.ev, mono.eu, mono.ew};
    ++out.antisymmetry_pairs;
    if (!(e.series.coefficient(swapped) == -c)) {
      out.antisymmetric = false;
      out.failures.push_back("coefficient of u^" + std::to_string(mono.eu) + " v^" + std::to_string(mono.ev) + " w^" +
                             std::to_string(mono.ew) + " is not antisymmetric");
    }
  }
  for (int d = 1; d <= e.max_total_degree; ++d) {
    for (int m = 1; m < d; ++m) {
      const int n = d - m;
      for (int s = 1; s <= std::min(m, n); ++s) {
        if (!(difference_poly(m, n, s, e).poly == -difference_poly(n, m, s, e).poly)) {
          out.antisymmetric = false;
          out.failures.push_back("difference_poly(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                 std::to_string(s) + ") antisymmetry");
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<BigReal>> height_one_taylor(double hu, double hv, int nodes, long precision_bits) {
  if (nodes < 2) throw DomainError("height_one_taylor: need at least two nodes");
  const std::vector<BigReal> us = chebyshev_nodes(hu, nodes, precision_bits);
  const std::vector<BigReal> vs = chebyshev_nodes(hv, nodes, precision_bits);
  // For each v node, coefficients in u; then interpolate each u-power across v.
  std::vector<std::vector<BigReal>> by_v;
  for (const BigReal& v : vs) {
    std::vector<BigReal> ys;
    for (const BigReal& u : us) ys.push_back(height_one_rhs(u, v));
    by_v.push_back(monomial_interpolate(us, ys));
  }
  std::vector<std::vector<BigReal>> c(nodes);
  for (int i = 0; i < nodes; ++i) {
    std::vector<BigReal> ys;
    for (int j = 0; j < nodes; ++j) ys.push_back(by_v[j][i]);
    c[i] = monomial_interpolate(vs, ys);
  }
  return c;
}

std::vector<VerificationReport> height_one_consistency(std::uint64_t seed, int grids, int max_weight,
                                                       double tolerance) {
  const long prec = kDefaultPrecisionBits;
  const int nodes = 42;
  if (max_weight - 1 >= nodes) throw DomainError("height_one_consistency: max_weight too large");
  const ExpansionResult& e = *shared_expansion(max_weight - 1);
  Rng rng(seed);
  std::vector<VerificationReport> out;
  for (int g = 0; g < grids; ++g) {
    double hu = 0, hv = 0;
    do {
      hu = rng.uniform(0.2, 0.3);
      hv = rng.uniform(0.2, 0.3);
    } while (std::abs(hu - hv) < 0.01);
    const auto c = height_one_taylor(hu, hv, nodes, prec);
    for (int d = 2; d + 1 <= max_weight; ++d) {
      for (int m = 1; m < d; ++m) {
        const int n = d - m;
        const ZetaPoly poly = difference_poly(m, n, 1, e).poly;
        VerificationReport r = make_report(
            "ko-height-one",
            {{"m", int_input(m)}, {"n", int_input(n)}, {"hu", BigReal(hu, 64)}, {"hv", BigReal(hv, 64)}},
            zp_eval(poly, prec), -c[m][n], tolerance);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<KoTableEntry> ko_table(int max_weight, const OracleOptions& oracle, int truncated_limit) {
  if (max_weight < 2) throw DomainError("ko_table: max_weight must be >= 2");
  const ExpansionResult& e = *shared_expansion(max_weight - 1);
  std::vector<KoTableEntry> out;
  for (int k = 3; k <= max_weight; ++k) {
    for (int m = 1; m <= k - 2; ++m) {
      const int n = k - 1 - m;
      for (int s = 1; s <= std::min(m, n); ++s) {
        OracleOptions o = oracle;
        if (k > truncated_limit) o.method = MzvMethod::holder;
        out.push_back({"difference", m, n, s, difference_poly(m, n, s, e).poly, cross_validate(m, n, s, o)});
      }
    }
  }
  for (int k = 2; k <= max_weight; ++k) {
    for (int s = 1; 2 * s <= k; ++s) {
      OracleOptions o = oracle;
      if (k > truncated_limit) o.method = MzvMethod::holder;
      out.push_back({"diagonal", k, 0, s, diagonal_poly(k, s, e), diagonal_validate(k, s, o)});
    }
  }
  return out;
}

}  // namespace mzstar
