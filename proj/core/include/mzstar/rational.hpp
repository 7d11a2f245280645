#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mzstar/big_real.hpp"

namespace mzstar {

/// Exact rational number.
using Rational = mpq_class;

/// Canonical "p/q" (or "p" when q = 1) rendering.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Nearest BigReal to q.
BigReal to_big_real(const Rational& q, long precision_bits);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

}  // namespace mzstar
