#include "mzstar/sampler.hpp"

#include <cmath>

namespace mzstar {

std::optional<std::string> domain_violation(const BigReal& u, const BigReal& v, const BigReal& t,
                                            const DomainLimits& limits) {
  const double ud = u.to_double(), vd = v.to_double(), td = t.to_double();
  if (std::abs(ud) > limits.radius || std::abs(vd) > limits.radius || std::abs(td) > limits.radius) {
    return "outside |u|,|v|,|t| <= " + std::to_string(limits.radius);
  }
  // a, b = (v - u ± sqrt((u+v)² + 4t²)) / 2
  const BigReal disc = sqrt((u + v) * (u + v) + 4L * t * t);
  const BigReal a = ldexp(v - u + disc, -1);
  const BigReal b = ldexp(v - u - disc, -1);
  struct Probe {
    const char* name;
    BigReal value;
  };
  const Probe probes[] = {{"|u|", u}, {"|v|", v}, {"|u-v|", u - v}, {"|a-b|", disc},
                          {"|ab|", a * b}, {"|u+a|", u + a}, {"|u+b|", u + b}};
  for (const auto& p : probes) {
    if (std::abs(p.value.to_double()) < limits.min_gap) return std::string(p.name) + " below gap";
  }
  return std::nullopt;
}

SamplePoint DomainSampler::next() {
  for (;;) {
    const double r = limits_.radius;
    BigReal u(rng_.uniform(-r, r), precision_bits_);
    BigReal v(rng_.uniform(-r, r), precision_bits_);
    BigReal t(rng_.uniform(-r, r), precision_bits_);
    if (!domain_violation(u, v, t, limits_)) return {std::move(u), std::move(v), std::move(t)};
  }
}

SamplePoint DomainSampler::next_t0() {
  for (;;) {
    const double r = limits_.radius;
    BigReal u(rng_.uniform(-r, r), precision_bits_);
    BigReal v(rng_.uniform(-r, r), precision_bits_);
    const double g = limits_.min_gap;
    if (std::abs(u.to_double()) < g || std::abs(v.to_double()) < g) continue;
    if (std::abs((u - v).to_double()) < g || std::abs((u + v).to_double()) < g) continue;
    return {std::move(u), std::move(v), BigReal(0L, precision_bits_)};
  }
}

}  // namespace mzstar
