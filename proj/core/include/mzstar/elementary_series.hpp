#pragma once

#include "mzstar/series.hpp"

namespace mzstar {

enum class ElementaryKind {
  gamma_one_minus,     ///< Γ(1-x) = exp(γx + Σ_{n>=2} ζ(n)xⁿ/n)
  inv_gamma_one_plus,  ///< 1/Γ(1+x) = exp(γx - Σ_{n>=2} (-1)ⁿζ(n)xⁿ/n)
  sin_pi_over_pi,      ///< sin(πx)/(πx), π² written as 6ζ(2)
  cos_pi,              ///< cos(π√X) for the supplied square X, π² written as 6ζ(2)
};

/// Expands the chosen function of x (for cos_pi, of X = x²) as a ZetaPoly
/// series. The argument must have zero constant term.
ZetaSeries elementary_series(ElementaryKind kind, const ZetaSeries& x);

/// S₁ with sin(πx)/(πx) = 1 + π²·S₁(x):
/// S₁ = Σ_{k>=1} (-1)^k (6ζ(2))^(k-1) x^(2k) / (2k+1)!.
ZetaSeries sin_pi_over_pi_reduced(const ZetaSeries& x);

/// C₁ with cos(π√X) = 1 + π²·C₁(X):
/// C₁ = Σ_{k>=1} (-1)^k (6ζ(2))^(k-1) X^k / (2k)!.
ZetaSeries cos_pi_reduced(const ZetaSeries& square);

/// log Γ(1-x) as the series γx + Σ_{n>=2} ζ(n)xⁿ/n.
ZetaSeries log_gamma_one_minus(const ZetaSeries& x);

}  // namespace mzstar
