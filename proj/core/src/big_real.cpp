#include "mzstar/big_real.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

#include "mzstar/error.hpp"

namespace mzstar {
namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long min_prec(const BigReal& a, const BigReal& b) { return std::min(a.precision(), b.precision()); }

// Rounds `x` in place to precision p if p is smaller than its current one.
void shrink(BigReal& x, long p) {
  if (x.precision() > p) mpfr_prec_round(x.get(), p, kRnd);
}

}  // namespace

BigReal::BigReal(long precision_bits) {
  mpfr_init2(value_, std::max<long>(precision_bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double x, long precision_bits) : BigReal(precision_bits) { mpfr_set_d(value_, x, kRnd); }

BigReal::BigReal(long x, long precision_bits) : BigReal(precision_bits) { mpfr_set_si(value_, x, kRnd); }

BigReal::BigReal(std::string_view decimal, long precision_bits) : BigReal(precision_bits) {
  std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, kRnd) != 0) {
    throw DomainError("BigReal: cannot parse '" + text + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_precision(long precision_bits) const {
  BigReal r(precision_bits);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, kRnd);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  shrink(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  shrink(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  shrink(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  shrink(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

// The binary operators compute directly into a result of the minimum
// precision so the wider operand is not rounded twice.
BigReal operator+(BigReal lhs, const BigReal& rhs) {
  if (lhs.precision() > rhs.precision()) {
    BigReal r(min_prec(lhs, rhs));
    mpfr_add(r.get(), lhs.get(), rhs.get(), kRnd);
    return r;
  }
  return lhs += rhs;
}

BigReal operator-(BigReal lhs, const BigReal& rhs) {
  if (lhs.precision() > rhs.precision()) {
    BigReal r(min_prec(lhs, rhs));
    mpfr_sub(r.get(), lhs.get(), rhs.get(), kRnd);
    return r;
  }
  return lhs -= rhs;
}

BigReal operator*(BigReal lhs, const BigReal& rhs) {
  if (lhs.precision() > rhs.precision()) {
    BigReal r(min_prec(lhs, rhs));
    mpfr_mul(r.get(), lhs.get(), rhs.get(), kRnd);
    return r;
  }
  return lhs *= rhs;
}

BigReal operator/(BigReal lhs, const BigReal& rhs) {
  if (lhs.precision() > rhs.precision()) {
    BigReal r(min_prec(lhs, rhs));
    mpfr_div(r.get(), lhs.get(), rhs.get(), kRnd);
    return r;
  }
  return lhs /= rhs;
}

BigReal operator+(BigReal lhs, long rhs) {
  mpfr_add_si(lhs.get(), lhs.get(), rhs, kRnd);
  return lhs;
}

BigReal operator-(BigReal lhs, long rhs) {
  mpfr_sub_si(lhs.get(), lhs.get(), rhs, kRnd);
  return lhs;
}

BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
BigReal operator+(long lhs, BigReal rhs) { return std::move(rhs) + lhs; }

BigReal operator-(long lhs, const BigReal& rhs) {
  BigReal r(rhs.precision());
  mpfr_si_sub(r.get(), lhs, rhs.get(), kRnd);
  return r;
}

BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }

BigReal operator/(long lhs, const BigReal& rhs) {
  BigReal r(rhs.precision());
  mpfr_si_div(r.get(), lhs, rhs.get(), kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

BigReal abs(const BigReal& x) {
  BigReal r(x);
  mpfr_abs(r.get(), r.get(), kRnd);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), kRnd);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_exp(r.get(), x.get(), kRnd);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log(r.get(), x.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(min_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigReal ldexp(const BigReal& x, long k) {
  BigReal r(x);
  mpfr_mul_2si(r.get(), r.get(), k, kRnd);
  return r;
}

BigReal round(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

BigReal exp2_int(long e, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_ui_2exp(r.get(), 1, e, kRnd);
  return r;
}

BigReal pi(long precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

BigReal from_fraction(long p, long q, long precision_bits) {
  BigReal r(p, precision_bits + 8);
  r /= q;
  return r.with_precision(precision_bits);
}

}  // namespace mzstar
