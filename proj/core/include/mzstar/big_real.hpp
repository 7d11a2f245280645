#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mzstar {

/// Working precision used when none is given explicitly.
inline constexpr long kDefaultPrecisionBits = 256;

/// Arbitrary-precision binary floating-point real backed by MPFR.
///
/// Every value carries its own precision. Binary operations round to the
/// smaller precision of their two operands, so mixing a 64-bit and a 256-bit
/// value yields a 64-bit result. All operations round to nearest.
class BigReal {
 public:
  BigReal() : BigReal(kDefaultPrecisionBits) {}
  explicit BigReal(long precision_bits);
  BigReal(double x, long precision_bits);
  BigReal(long x, long precision_bits);
  BigReal(int x, long precision_bits) : BigReal(static_cast<long>(x), precision_bits) {}
  /// Parses a decimal string ("0.1", "-3e-5", "17/4" is not accepted).
  BigReal(std::string_view decimal, long precision_bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Same value rounded to a new precision.
  BigReal with_precision(long precision_bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal rendering with `digits` significant digits ("-1.2345e-07" style).
  std::string to_string(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs);
  friend BigReal operator-(BigReal lhs, const BigReal& rhs);
  friend BigReal operator*(BigReal lhs, const BigReal& rhs);
  friend BigReal operator/(BigReal lhs, const BigReal& rhs);
  friend BigReal operator+(BigReal lhs, long rhs);
  friend BigReal operator-(BigReal lhs, long rhs);
  friend BigReal operator*(BigReal lhs, long rhs);
  friend BigReal operator/(BigReal lhs, long rhs);
  friend BigReal operator+(long lhs, BigReal rhs);
  friend BigReal operator-(long lhs, const BigReal& rhs);
  friend BigReal operator*(long lhs, BigReal rhs);
  friend BigReal operator/(long lhs, const BigReal& rhs);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
/// x^n for integer n.
BigReal pow(const BigReal& x, long n);
/// x^y for real y, x > 0.
BigReal pow(const BigReal& x, const BigReal& y);
/// Multiplies by 2^k exactly.
BigReal ldexp(const BigReal& x, long k);
/// Nearest integer (ties away from zero).
BigReal round(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);

/// 2^e at the given precision.
BigReal exp2_int(long e, long precision_bits);

/// π rounded to the given precision.
BigReal pi(long precision_bits);

/// Exact rational p/q rounded to the given precision.
BigReal from_fraction(long p, long q, long precision_bits);

}  // namespace mzstar
