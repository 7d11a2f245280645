#include "mzstar/rational.hpp"

#include "mzstar/error.hpp"

namespace mzstar {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw DomainError("cannot parse rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return q;
}

BigReal to_big_real(const Rational& q, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace mzstar
