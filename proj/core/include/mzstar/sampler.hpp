#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "mzstar/big_real.hpp"

namespace mzstar {

/// Seeded generator with a platform-independent uniform double mapping
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi), built from the top 53 bits of one engine draw.
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Sampling-domain limits shared by every identity check.
struct DomainLimits {
  double radius = 0.25;     ///< |u|, |v|, |t| <= radius
  double min_gap = 1e-3;    ///< rejection threshold for the degenerate quantities
};

struct SamplePoint {
  BigReal u;
  BigReal v;
  BigReal t;
};

/// Why a point is rejected, or nullopt if it lies in the sampling domain:
/// |u|,|v|,|t| <= radius and |u|, |v|, |u-v|, |a-b|, |ab|, |u+a|, |u+b| >= min_gap,
/// where a + b = v - u, ab = -uv - t².
std::optional<std::string> domain_violation(const BigReal& u, const BigReal& v, const BigReal& t,
                                            const DomainLimits& limits = {});

/// Seeded uniform sampler on the rejection-filtered (u, v, t) domain.
class DomainSampler {
 public:
  DomainSampler(std::uint64_t seed, long precision_bits, DomainLimits limits = {})
      : rng_(seed), precision_bits_(precision_bits), limits_(limits) {}

  SamplePoint next();
  /// Same as next() with t forced to 0 (height-one checks); |u+a|,|u+b|
  /// constraints are not applied since one of them vanishes identically.
  SamplePoint next_t0();

  Rng& rng() { return rng_; }

 private:
  Rng rng_;
  long precision_bits_;
  DomainLimits limits_;
};

}  // namespace mzstar
