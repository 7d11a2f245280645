#pragma once

#include "mzstar/rational.hpp"

namespace mzstar {

/// Bernoulli number B_n with the convention B_1 = -1/2. Results are cached;
/// safe to call concurrently.
const Rational& bernoulli(unsigned n);

/// Bernoulli polynomial B_n(x) evaluated at a real point.
BigReal bernoulli_polynomial(unsigned n, const BigReal& x);

}  // namespace mzstar
