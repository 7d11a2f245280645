#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>

#include "mzstar/big_real.hpp"
#include "mzstar/rational.hpp"

namespace mzstar {

/// Exponent vector of a monomial in the generators γ, ζ(2), ζ(3), ...
/// Slot 0 holds the γ exponent, slot i >= 1 the exponent of ζ(i+1); slot i
/// therefore carries weight i + 1.
class ZetaMonomial {
 public:
  static constexpr unsigned kSlots = 40;  // ζ(n) for n <= 40

  ZetaMonomial() { exps_.fill(0); }
  static ZetaMonomial gamma(unsigned power = 1);
  static ZetaMonomial zeta(unsigned n, unsigned power = 1);

  unsigned gamma_exponent() const { return exps_[0]; }
  /// Exponent of ζ(n), n >= 2.
  unsigned zeta_exponent(unsigned n) const { return n < 2 || n > kSlots ? 0 : exps_[n - 1]; }
  unsigned slot(unsigned i) const { return exps_[i]; }
  unsigned weight() const;
  bool is_one() const;

  ZetaMonomial operator*(const ZetaMonomial& other) const;
  auto operator<=>(const ZetaMonomial&) const = default;

 private:
  std::array<std::uint8_t, kSlots> exps_;
};

/// Element of ℚ[γ, ζ(2), ζ(3), ...]. Even zetas are independent generators;
/// no relation among the generators is applied. Canonical sparse form: no
/// stored zero coefficients.
class ZetaPoly {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  ZetaPoly() = default;
  ZetaPoly(const Rational& c);  // NOLINT: implicit embedding of constants
  ZetaPoly(long c) : ZetaPoly(Rational(c)) {}  // NOLINT
  ZetaPoly(int c) : ZetaPoly(Rational(c)) {}   // NOLINT
  ZetaPoly(const ZetaMonomial& m, const Rational& c);

  static ZetaPoly gamma() { return ZetaPoly(ZetaMonomial::gamma(), 1); }
  static ZetaPoly zeta(unsigned n) { return ZetaPoly(ZetaMonomial::zeta(n), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff the polynomial is a rational constant (including 0).
  bool is_constant() const;
  Rational constant_term() const;
  /// Coefficient of a monomial (0 if absent).
  Rational coefficient(const ZetaMonomial& m) const;

  /// Largest n with ζ(n) present (0 if none).
  unsigned max_zeta_index() const;
  bool is_gamma_free() const;
  /// Part with γ-exponent exactly k, with γ^k divided out.
  ZetaPoly gamma_coefficient(unsigned k) const;
  /// True iff every term has the given weight (the zero polynomial is
  /// homogeneous of every weight).
  bool is_homogeneous(unsigned weight) const;
  /// Splits into weight-homogeneous components keyed by weight.
  std::map<unsigned, ZetaPoly> weight_decompose() const;

  ZetaPoly operator-() const;
  ZetaPoly& operator+=(const ZetaPoly& rhs);
  ZetaPoly& operator-=(const ZetaPoly& rhs);
  ZetaPoly& operator*=(const Rational& rhs);
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend ZetaPoly operator*(ZetaPoly a, const Rational& b) { return a *= b; }
  friend ZetaPoly operator*(const Rational& b, ZetaPoly a) { return a *= b; }
  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

  /// Numeric value with γ and ζ(n) at the requested precision.
  BigReal eval(long precision_bits) const;

  /// Plain text, terms sorted by (weight, exponent vector), e.g.
  /// "17/4*z(4) - 3*z(2)^2". γ renders as "g".
  std::string to_text() const;
  /// LaTeX rendering, e.g. "\frac{17}{4}\zeta(4)-3\zeta(2)^{2}".
  std::string to_latex() const;
  /// [{"coeff":"17/4","gamma":0,"zeta":[[4,1]]}, ...]
  nlohmann::json to_json() const;
  static ZetaPoly from_json(const nlohmann::json& j);

  /// Rewrites every ζ(2k) as c_k ζ(2)^k (ζ(2k) = (-1)^(k+1) B_2k (2π)^2k / (2 (2k)!),
  /// π² = 6ζ(2)). Display helper only; each c_k is checked numerically first.
  ZetaPoly even_zetas_as_zeta2() const;

  /// Merges the even-zeta part of every monomial into a single ζ(2K) using
  /// ζ(2a)ζ(2b) = (c_a c_b / c_(a+b)) ζ(2a+2b), c_k from even_zeta_ratio.
  /// Since ℚ[ζ(2), ζ(4), …] = ℚ[π²] has basis {ζ(2K)}, this is a normal form
  /// for the even part; odd generators and γ are untouched.
  ZetaPoly fold_even_zetas() const;

 private:
  void add_term(const ZetaMonomial& m, const Rational& c);
  Terms terms_;
};

/// zp_eval: numeric evaluation (free-function spelling).
inline BigReal zp_eval(const ZetaPoly& p, long precision_bits) { return p.eval(precision_bits); }
/// zp_is_gamma_free.
inline bool zp_is_gamma_free(const ZetaPoly& p) { return p.is_gamma_free(); }

/// Rational c_k with ζ(2k) = c_k ζ(2)^k.
Rational even_zeta_ratio(unsigned k);

}  // namespace mzstar
