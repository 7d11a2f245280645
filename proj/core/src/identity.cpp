#include "mzstar/identity.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "mzstar/error.hpp"
#include "mzstar/hyper.hpp"
#include "mzstar/mzv.hpp"
#include "mzstar/special_functions.hpp"

namespace mzstar {

namespace {

// Γ(x)Γ(1−x)
BigReal reflect(const BigReal& x) { return gamma(x) * gamma(1L - x); }

BigReal sum32(const BigReal& a1, const BigReal& a2, const BigReal& a3, const BigReal& b1, const BigReal& b2) {
  return hyper_unit_sum({a1, a2, a3}, {b1, b2}, working_target(a1.precision())).value;
}

// Γ(a)Γ(1−a)Γ(b)Γ(1−b)Γ(u+a)Γ(u+b) / (Γ(u)Γ(v))
BigReal gamma_block(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  return reflect(a) * reflect(b) * gamma(u + a) * gamma(u + b) / (gamma(u) * gamma(v));
}

std::vector<std::pair<std::string, BigReal>> uvt(const BigReal& u, const BigReal& v, const BigReal& t) {
  return {{"u", u}, {"v", v}, {"t", t}};
}

// Report whose right side is whichever candidate lies farthest from lhs.
VerificationReport worst_of(std::string identity, std::vector<std::pair<std::string, BigReal>> inputs,
                            const BigReal& lhs, const std::vector<std::pair<std::string, BigReal>>& candidates,
                            double tolerance) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (abs(lhs - candidates[i].second) > abs(lhs - candidates[worst].second)) worst = i;
  }
  VerificationReport r = make_report(std::move(identity), std::move(inputs), lhs, candidates[worst].second, tolerance);
  r.notes.push_back("rhs is the " + candidates[worst].first + " form");
  return r;
}

}  // namespace

QuadRoots quad_roots(const BigReal& e1, const BigReal& e2) {
  const BigReal disc = e1 * e1 - 4L * e2;
  if (disc < 0L) throw DomainError("quad_roots: negative discriminant " + disc.to_string(10));
  const BigReal root = sqrt(disc);
  return {e1, e2, ldexp(e1 + root, -1), ldexp(e1 - root, -1)};
}

QuadRoots roots_ab(const BigReal& u, const BigReal& v, const BigReal& t) { return quad_roots(v - u, -(u * v) - t * t); }

QuadRoots roots_alphabeta(const BigReal& u, const BigReal& v, const BigReal& t) {
  return quad_roots(u + v, u * v - t * t);
}

BigReal A_eval(AForm form, const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  switch (form) {
    case AForm::trig: {
      const BigReal bracket =
          cos_pi(u) / sin_pi(v) - cos_pi(v) / sin_pi(u) + cos_pi(a - b) * (cot_pi(u) - cot_pi(v));
      return bracket / (2L * pi(bracket.precision()));
    }
    case AForm::gamma_a:
      return (reflect(v) / reflect(a) + reflect(u) / reflect(b)) / reflect(u + a);
    case AForm::gamma_b:
      return (reflect(v) / reflect(b) + reflect(u) / reflect(a)) / reflect(u + b);
  }
  throw DomainError("A_eval: unknown form");
}

BigReal phi_star_3f2(const BigReal& u, const BigReal& v, const BigReal& t, bool swap_roots) {
  const QuadRoots r = roots_alphabeta(u, v, t);
  const BigReal& beta = swap_roots ? r.r_plus : r.r_minus;
  const BigReal one(1L, u.precision());
  return sum32(1L - beta, 1L - beta + u, one, 2L - v, 2L - beta) / ((1L - v) * (1L - beta));
}

BigReal phi_star_ako(const BigReal& u, const BigReal& v, const BigReal& t) {
  const QuadRoots r = roots_alphabeta(u, v, t);
  if (abs(r.r_plus - r.r_minus).to_double() < kHyperMargin) {
    throw DomainError("phi_star_ako: alpha and beta coincide within 1e-3");
  }
  const BigReal vv = reflect(v);
  const auto part = [&](const BigReal& al, const BigReal& be) {
    const BigReal pre = gamma(be - al) * gamma(1L - be) * vv / (gamma(1L - al) * gamma(1L + u - al) * gamma(1L + al - u));
    return pre * sum32(al, 1L - be, al - u, 1L + al - be, 1L + al - u);
  };
  return part(r.r_plus, r.r_minus) + part(r.r_minus, r.r_plus);
}

BigReal F_eval(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  const BigReal ua = u + a;
  const BigReal pre = gamma(b - a) / (gamma(1L - ua) * gamma(1L + ua));
  const BigReal s1 = sum32(a, 1L - b, ua, 1L + a - b, 1L + ua);
  const BigReal s2 = sum32(1L + a, -b, ua, 1L + a - b, 1L + ua);
  const BigReal first = u * reflect(v) * gamma(1L - b) / gamma(1L - a) * s1;
  const BigReal second = v * reflect(u) * gamma(1L + a) / gamma(1L + b) * s2;
  return pre * (first - second);
}

BigReal F1_eval(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  const BigReal ua = u + a;
  const BigReal pre = ua * gamma(b - a) * gamma(1L + a - b) / ((u + b) * gamma(1L - ua) * gamma(1L + ua));
  return pre * (u * reflect(v) / (b * reflect(a)) - v * reflect(u) / (a * reflect(b)));
}

BigReal F2_eval(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  const BigReal ua = u + a;
  const BigReal pre = u * v * (a - b) * gamma(b - a) / ((u + b) * gamma(1L - ua) * gamma(1L + ua));
  const BigReal bracket = reflect(v) * gamma(-b) / gamma(1L - a) - reflect(u) * gamma(a) / gamma(1L + b);
  return pre * bracket * sum32(a, -b, ua, a - b, 1L + ua);
}

BigReal F1_pair_closed_form(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  const BigReal ab = a * b;
  const BigReal A = A_eval(AForm::trig, u, v, a, b);
  return (u - v) / ab + (a - b) * u * v / (ab * (u + a) * (u + b)) * gamma(b - a) * gamma(1L + a - b) * A;
}

BigReal F2_pair_closed_form(const BigReal& u, const BigReal& v, const BigReal& a, const BigReal& b) {
  const BigReal ab = a * b;
  const BigReal A = A_eval(AForm::trig, u, v, a, b);
  return (b - a) * u * v / (ab * (u + a) * (u + b)) * gamma(b - a) * gamma(1L + a - b) * A +
         A * gamma_block(u, v, a, b);
}

BigReal theorem_rhs(const BigReal& u, const BigReal& v, const BigReal& t) {
  const QuadRoots r = roots_ab(u, v, t);
  if (!t.is_zero()) {
    const BigReal& a = r.r_plus;
    const BigReal& b = r.r_minus;
    return (u - v) / (a * b) + A_eval(AForm::trig, u, v, a, b) * gamma_block(u, v, a, b);
  }
  // one of u + a, u + b is zero; call that root a
  const bool plus_cancels = abs(u + r.r_plus) < abs(u + r.r_minus);
  const BigReal& a = plus_cancels ? r.r_plus : r.r_minus;
  const BigReal& b = plus_cancels ? r.r_minus : r.r_plus;
  const BigReal A_times_gamma = (reflect(v) / reflect(a) + reflect(u) / reflect(b)) / gamma(1L - u - a);
  return (u - v) / (a * b) + A_times_gamma * reflect(a) * reflect(b) * gamma(u + b) / (gamma(u) * gamma(v));
}

BigReal height_one_rhs(const BigReal& u, const BigReal& v) {
  const BigReal gu = reflect(u), gv = reflect(v);
  return 1L / u - 1L / v + gamma(u + v) / (gamma(u) * gamma(v)) * (gv * gv - gu * gu);
}

BigReal theorem_lhs(const BigReal& u, const BigReal& v, const BigReal& t, LhsMethod method, int max_weight) {
  const auto phi = [&](const BigReal& x, const BigReal& y) -> BigReal {
    switch (method) {
      case LhsMethod::f32:
        return phi_star_3f2(x, y, t);
      case LhsMethod::ako:
        return phi_star_ako(x, y, t);
      case LhsMethod::truncated:
        return phi_star_truncated(x, y, t, max_weight, x.precision()).value;
    }
    throw DomainError("theorem_lhs: unknown method");
  };
  return u * phi(-u, v) - v * phi(-v, u);
}

VerificationReport a_forms_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers) {
  const QuadRoots r = roots_ab(u, v, t);
  const BigReal trig = A_eval(AForm::trig, u, v, r);
  return worst_of("lemma21", uvt(u, v, t), trig,
                  {{"gamma_a", A_eval(AForm::gamma_a, u, v, r)}, {"gamma_b", A_eval(AForm::gamma_b, u, v, r)}},
                  tiers.tier1);
}

VerificationReport phi_agree_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers) {
  const BigReal f32 = phi_star_3f2(u, v, t);
  VerificationReport r = make_report("phi-agree", uvt(u, v, t), f32, phi_star_ako(u, v, t), tiers.tier1);
  const BigReal swapped = phi_star_3f2(u, v, t, true);
  r.notes.push_back("root swap in the 3F2 form moves it by " + abs(swapped - f32).to_string(6));
  return r;
}

VerificationReport phi_truncation_check(const BigReal& u, const BigReal& v, const BigReal& t, LhsMethod closed_form,
                                        int max_weight, double tolerance) {
  const BigReal closed = closed_form == LhsMethod::ako ? phi_star_ako(u, v, t) : phi_star_3f2(u, v, t);
  const TruncatedValue trunc = phi_star_truncated(u, v, t, max_weight, u.precision());
  const std::string name = closed_form == LhsMethod::ako ? "phi-ako-vs-definition" : "phi-3f2-vs-definition";
  VerificationReport r = make_report(name, uvt(u, v, t), closed, trunc.value, tolerance);
  r.notes.push_back("max_weight " + std::to_string(max_weight) + ", tail estimate " +
                    BigReal(trunc.tail_estimate, 53).to_string(3));
  return r;
}

VerificationReport f_sum_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers) {
  const QuadRoots r = roots_ab(u, v, t);
  const BigReal lhs = F_eval(u, v, r.r_plus, r.r_minus) + F_eval(u, v, r.r_minus, r.r_plus);
  return make_report("lemma42", uvt(u, v, t), lhs, theorem_lhs(u, v, t, LhsMethod::f32), tiers.tier1);
}

VerificationReport f_split_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers) {
  const QuadRoots r = roots_ab(u, v, t);
  const BigReal& a = r.r_plus;
  const BigReal& b = r.r_minus;
  // F = F1 + F2 for both orderings; report the worse one
  const BigReal dab = F_eval(u, v, a, b) - F1_eval(u, v, a, b) - F2_eval(u, v, a, b);
  const BigReal dba = F_eval(u, v, b, a) - F1_eval(u, v, b, a) - F2_eval(u, v, b, a);
  const bool ab_worse = abs(dab) >= abs(dba);
  const BigReal& x = ab_worse ? a : b;
  const BigReal& y = ab_worse ? b : a;
  VerificationReport rep =
      make_report("lemma43", uvt(u, v, t), F_eval(u, v, x, y), F1_eval(u, v, x, y) + F2_eval(u, v, x, y), tiers.tier1);
  rep.notes.push_back(ab_worse ? "ordering (a,b)" : "ordering (b,a)");
  return rep;
}

VerificationReport f1_pair_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers) {
  const QuadRoots r = roots_ab(u, v, t);
  const BigReal& a = r.r_plus;
  const BigReal& b = r.r_minus;
  return make_report("lemma44", uvt(u, v, t), F1_eval(u, v, a, b) + F1_eval(u, v, b, a),
                     F1_pair_closed_form(u, v, a, b), tiers.tier1);
}

VerificationReport f2_pair_check(const BigReal& u, const BigReal& v, const BigReal& t, const Tiers& tiers) {
  const QuadRoots r = roots_ab(u, v, t);
  const BigReal& a = r.r_plus;
  const BigReal& b = r.r_minus;
  return make_report("lemma45", uvt(u, v, t), F2_eval(u, v, a, b) + F2_eval(u, v, b, a),
                     F2_pair_closed_form(u, v, a, b), tiers.tier1);
}

VerificationReport theorem_check(const BigReal& u, const BigReal& v, const BigReal& t, LhsMethod method,
                                 const Tiers& tiers, int max_weight) {
  double tol = tiers.tier1;
  std::string name = "theorem";
  if (method == LhsMethod::truncated) {
    tol = max_weight >= 14 ? tiers.truncation_w14 : tiers.truncation_w12;
    name = "theorem-definition";
  } else if (method == LhsMethod::ako) {
    name = "theorem-ako";
  }
  VerificationReport r = make_report(name, uvt(u, v, t), theorem_lhs(u, v, t, method, max_weight), theorem_rhs(u, v, t), tol);
  if (method == LhsMethod::truncated) r.notes.push_back("max_weight " + std::to_string(max_weight));
  if (t.is_zero()) r.notes.push_back("t = 0: A·Γ(u+a) taken through the Γ-form of A");
  return r;
}

VerificationReport height_one_check(const BigReal& u, const BigReal& v, const Tiers& tiers) {
  const BigReal zero(0L, u.precision());
  return make_report("height-one", {{"u", u}, {"v", v}}, theorem_lhs(u, v, zero, LhsMethod::f32), height_one_rhs(u, v),
                     tiers.tier1);
}

bool partial_fraction_holds(const Rational& n, const Rational& a, const Rational& b, const Rational& u) {
  const Rational v = u + a + b;
  const Rational d1 = n + a - b, d2 = n + u + a, d3 = u + b;
  if (d1 == 0 || d2 == 0 || d3 == 0) throw DomainError("partial_fraction_holds: vanishing denominator");
  const Rational lhs = (n - b) / (d1 * d2);
  const Rational rhs = (-a / d3) / d1 + (v / d3) / d2;
  return lhs == rhs;
}

PartialFractionSummary partial_fraction_check(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const auto draw = [&rng] {
    const long num = static_cast<long>(rng.next() % 2001) - 1000;
    const long den = static_cast<long>(rng.next() % 97) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  PartialFractionSummary out;
  while (out.points < count) {
    const Rational n(static_cast<long>(rng.next() % 50));
    const Rational a = draw(), b = draw(), u = draw();
    try {
      if (!partial_fraction_holds(n, a, b, u)) ++out.failures;
      ++out.points;
    } catch (const DomainError&) {
    }
  }
  return out;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"lemma21", "phi-agree", "lemma42",    "lemma43",     "lemma44",
                                              "lemma45", "theorem",   "height-one", "ohno-zagier", "partial-fraction"};
  return names;
}

namespace {

// Evaluates f over the points on worker threads; output order follows the input.
template <typename Point, typename F>
std::vector<VerificationReport> parallel_map(const std::vector<Point>& points, F f) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerificationReport> out(points.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < points.size(); i += workers) out[i] = f(points[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

std::vector<SamplePoint> draw_points(std::uint64_t seed, long prec, std::size_t count, DomainLimits limits = {},
                                     bool t0 = false) {
  DomainSampler sampler(seed, prec, limits);
  std::vector<SamplePoint> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(t0 ? sampler.next_t0() : sampler.next());
  return pts;
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  sort_reports(more);
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<VerificationReport> run_identity(const std::string& name, const SuiteConfig& c) {
  const long prec = c.precision_bits;
  const Tiers& tiers = c.tiers;
  const DomainLimits trunc_limits{c.truncation_radius, 1e-3};
  std::vector<VerificationReport> out;

  const auto per_point = [&](auto check) {
    return parallel_map(draw_points(c.seed, prec, c.samples),
                        [&](const SamplePoint& p) { return check(p.u, p.v, p.t, tiers); });
  };

  if (name == "lemma21") {
    append(out, per_point(a_forms_check));
  } else if (name == "phi-agree") {
    append(out, per_point(phi_agree_check));
    const auto pts = draw_points(c.seed + 1, prec, c.truncation_samples, trunc_limits);
    for (LhsMethod m : {LhsMethod::f32, LhsMethod::ako}) {
      append(out, parallel_map(pts, [&](const SamplePoint& p) {
               return phi_truncation_check(p.u, p.v, p.t, m, 14, tiers.truncation_w14);
             }));
    }
  } else if (name == "lemma42") {
    append(out, per_point(f_sum_check));
  } else if (name == "lemma43") {
    append(out, per_point(f_split_check));
  } else if (name == "lemma44") {
    append(out, per_point(f1_pair_check));
  } else if (name == "lemma45") {
    append(out, per_point(f2_pair_check));
  } else if (name == "theorem") {
    append(out, parallel_map(draw_points(c.seed, prec, c.samples), [&](const SamplePoint& p) {
             return theorem_check(p.u, p.v, p.t, LhsMethod::f32, tiers);
           }));
    append(out, parallel_map(draw_points(c.seed + 1, prec, c.truncation_samples, trunc_limits),
                             [&](const SamplePoint& p) {
                               return theorem_check(p.u, p.v, p.t, LhsMethod::truncated, tiers, c.max_weight);
                             }));
  } else if (name == "height-one") {
    const auto pts = draw_points(c.seed, prec, c.samples, {}, true);
    append(out, parallel_map(pts, [&](const SamplePoint& p) { return height_one_check(p.u, p.v, tiers); }));
    append(out, parallel_map(pts, [&](const SamplePoint& p) {
             VerificationReport r = make_report("height-one-vs-theorem", {{"u", p.u}, {"v", p.v}},
                                                height_one_rhs(p.u, p.v), theorem_rhs(p.u, p.v, p.t), tiers.tier1);
             return r;
           }));
  } else if (name == "ohno-zagier") {
    DomainSampler sampler(c.seed, prec, trunc_limits);
    std::vector<SamplePoint> pts;
    while (pts.size() < c.truncation_samples) {
      SamplePoint p = sampler.next();
      if (abs(p.u * p.v - p.t).to_double() >= 1e-3) pts.push_back(std::move(p));
    }
    append(out, parallel_map(pts, [&](const SamplePoint& p) {
             return ohno_zagier_check(p.u, p.v, p.t, c.max_weight, tiers.truncation_w12, prec);
           }));
  } else if (name == "partial-fraction") {
    const PartialFractionSummary s = partial_fraction_check(c.seed, 1000);
    VerificationReport r = make_report("partial-fraction", {{"points", BigReal(static_cast<long>(s.points), 64)}},
                                       BigReal(static_cast<long>(s.failures), 64), BigReal(0L, 64), 0.0);
    r.notes.push_back("exact rational arithmetic; lhs counts failing points");
    out.push_back(std::move(r));
  } else {
    throw DomainError("run_identity: unknown identity '" + name + "'");
  }
  return out;
}

}  // namespace mzstar
