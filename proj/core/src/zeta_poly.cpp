#include "mzstar/zeta_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "mzstar/bernoulli.hpp"
#include "mzstar/error.hpp"
#include "mzstar/special_functions.hpp"

namespace mzstar {

ZetaMonomial ZetaMonomial::gamma(unsigned power) {
  ZetaMonomial m;
  m.exps_[0] = static_cast<std::uint8_t>(power);
  return m;
}

ZetaMonomial ZetaMonomial::zeta(unsigned n, unsigned power) {
  if (n < 2 || n > kSlots) throw DomainError("ZetaMonomial: zeta index out of range: " + std::to_string(n));
  ZetaMonomial m;
  m.exps_[n - 1] = static_cast<std::uint8_t>(power);
  return m;
}

unsigned ZetaMonomial::weight() const {
  unsigned w = 0;
  for (unsigned i = 0; i < kSlots; ++i) w += exps_[i] * (i + 1);
  return w;
}

bool ZetaMonomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

ZetaMonomial ZetaMonomial::operator*(const ZetaMonomial& other) const {
  ZetaMonomial r;
  for (unsigned i = 0; i < kSlots; ++i) {
    unsigned e = exps_[i] + other.exps_[i];
    if (e > 255) throw DomainError("ZetaMonomial: exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

ZetaPoly::ZetaPoly(const Rational& c) {
  if (c != 0) terms_.emplace(ZetaMonomial{}, c);
}

ZetaPoly::ZetaPoly(const ZetaMonomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool ZetaPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational ZetaPoly::constant_term() const { return coefficient(ZetaMonomial{}); }

Rational ZetaPoly::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ZetaPoly::max_zeta_index() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    for (unsigned n = ZetaMonomial::kSlots; n >= 2; --n) {
      if (m.zeta_exponent(n) != 0) {
        best = std::max(best, n);
        break;
      }
    }
  }
  return best;
}

bool ZetaPoly::is_gamma_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.gamma_exponent() == 0; });
}

ZetaPoly ZetaPoly::gamma_coefficient(unsigned k) const {
  ZetaPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.gamma_exponent() != k) continue;
    ZetaMonomial stripped;
    for (unsigned n = 2; n <= ZetaMonomial::kSlots; ++n) {
      if (m.zeta_exponent(n) != 0) stripped = stripped * ZetaMonomial::zeta(n, m.zeta_exponent(n));
    }
    out.add_term(stripped, c);
  }
  return out;
}

bool ZetaPoly::is_homogeneous(unsigned weight) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.first.weight() == weight; });
}

std::map<unsigned, ZetaPoly> ZetaPoly::weight_decompose() const {
  std::map<unsigned, ZetaPoly> parts;
  for (const auto& [m, c] : terms_) parts[m.weight()].add_term(m, c);
  return parts;
}

void ZetaPoly::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZetaPoly ZetaPoly::operator-() const {
  ZetaPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ZetaPoly& ZetaPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= rhs;
  }
  return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

BigReal ZetaPoly::eval(long precision_bits) const {
  const long wp = precision_bits + 16;
  std::vector<BigReal> gens;  // slot values
  gens.reserve(ZetaMonomial::kSlots);
  gens.push_back(euler_gamma(wp));
  unsigned top = std::max(2u, max_zeta_index());
  for (unsigned n = 2; n <= top; ++n) gens.push_back(zeta_value(n, wp));
  BigReal sum(0L, wp);
  for (const auto& [m, c] : terms_) {
    BigReal term = to_big_real(c, wp);
    for (unsigned i = 0; i < gens.size(); ++i) {
      if (m.slot(i) != 0) term *= pow(gens[i], static_cast<long>(m.slot(i)));
    }
    sum += term;
  }
  return sum.with_precision(precision_bits);
}

namespace {

struct OrderedTerm {
  unsigned weight;
  const ZetaMonomial* mono;
  const Rational* coeff;
};

// (weight, exponent vector) ascending.
std::vector<OrderedTerm> ordered_terms(const ZetaPoly::Terms& terms) {
  std::vector<OrderedTerm> out;
  out.reserve(terms.size());
  for (const auto& [m, c] : terms) out.push_back({m.weight(), &m, &c});
  std::stable_sort(out.begin(), out.end(), [](const OrderedTerm& a, const OrderedTerm& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return *a.mono < *b.mono;
  });
  return out;
}

std::string monomial_text(const ZetaMonomial& m, bool latex) {
  std::string s;
  auto factor = [&](const std::string& base, unsigned e) {
    if (e == 0) return;
    if (!s.empty() && !latex) s += "*";
    s += base;
    if (e > 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  };
  factor(latex ? "\\gamma" : "g", m.gamma_exponent());
  for (unsigned n = 2; n <= ZetaMonomial::kSlots; ++n) {
    factor(latex ? "\\zeta(" + std::to_string(n) + ")" : "z(" + std::to_string(n) + ")", m.zeta_exponent(n));
  }
  return s;
}

}  // namespace

std::string ZetaPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ordered_terms(terms_)) {
    Rational c = *t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_text(*t.mono, false);
    if (mono.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono;
    } else {
      os << c.get_str() << "*" << mono;
    }
  }
  return os.str();
}

std::string ZetaPoly::to_latex() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ordered_terms(terms_)) {
    Rational c = *t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    std::string mono = monomial_text(*t.mono, true);
    std::string coeff;
    if (c.get_den() == 1) {
      coeff = c.get_num().get_str();
    } else {
      coeff = "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    }
    if (mono.empty()) {
      os << coeff;
    } else if (c == 1) {
      os << mono;
    } else {
      os << coeff << mono;
    }
  }
  return os.str();
}

nlohmann::json ZetaPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : ordered_terms(terms_)) {
    nlohmann::json zeta = nlohmann::json::array();
    for (unsigned n = 2; n <= ZetaMonomial::kSlots; ++n) {
      if (t.mono->zeta_exponent(n) != 0) zeta.push_back({n, t.mono->zeta_exponent(n)});
    }
    arr.push_back({{"coeff", to_string(*t.coeff)}, {"gamma", t.mono->gamma_exponent()}, {"zeta", zeta}});
  }
  return arr;
}

ZetaPoly ZetaPoly::from_json(const nlohmann::json& j) {
  ZetaPoly p;
  for (const auto& term : j) {
    ZetaMonomial m = ZetaMonomial::gamma(term.at("gamma").get<unsigned>());
    for (const auto& z : term.at("zeta")) m = m * ZetaMonomial::zeta(z.at(0).get<unsigned>(), z.at(1).get<unsigned>());
    p.add_term(m, parse_rational(term.at("coeff").get<std::string>()));
  }
  return p;
}

Rational even_zeta_ratio(unsigned k) {
  if (k == 0) throw DomainError("even_zeta_ratio: k must be >= 1");
  // ζ(2k) = (-1)^(k+1) B_2k 2^(2k) π^(2k) / (2 (2k)!) and π^(2k) = 6^k ζ(2)^k.
  mpz_class two_pow = 1, six_pow = 1;
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), 2 * k);
  mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, k);
  Rational c = bernoulli(2 * k) * Rational(two_pow * six_pow) / Rational(2 * factorial(2 * k));
  if (k % 2 == 0) c = -c;
  return c;
}

ZetaPoly ZetaPoly::even_zetas_as_zeta2() const {
  constexpr long kCheckBits = 128;
  ZetaPoly out;
  for (const auto& [m, c] : terms_) {
    ZetaPoly term(c);
    term = term * ZetaPoly(ZetaMonomial::gamma(m.gamma_exponent()), 1);
    for (unsigned n = 2; n <= ZetaMonomial::kSlots; ++n) {
      const unsigned e = m.zeta_exponent(n);
      if (e == 0) continue;
      ZetaPoly factor;
      if (n % 2 == 0 && n > 2) {
        const unsigned k = n / 2;
        const Rational ck = even_zeta_ratio(k);
        BigReal lhs = zeta_value(n, kCheckBits);
        BigReal rhs = to_big_real(ck, kCheckBits) * pow(zeta_value(2, kCheckBits), static_cast<long>(k));
        if (abs(lhs - rhs) > exp2_int(-100, kCheckBits) * abs(lhs)) {
          throw Error("even_zetas_as_zeta2: numeric check of zeta(" + std::to_string(n) + ") failed");
        }
        factor = ZetaPoly(ZetaMonomial::zeta(2, k), ck);
      } else {
        factor = ZetaPoly::zeta(n);
      }
      for (unsigned i = 0; i < e; ++i) term = term * factor;
    }
    out += term;
  }
  return out;
}

ZetaPoly ZetaPoly::fold_even_zetas() const {
  ZetaPoly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    unsigned total = 0;
    ZetaMonomial rest = ZetaMonomial::gamma(m.gamma_exponent());
    for (unsigned n = 2; n <= ZetaMonomial::kSlots; ++n) {
      const unsigned e = m.zeta_exponent(n);
      if (e == 0) continue;
      if (n % 2 == 0) {
        const Rational ck = even_zeta_ratio(n / 2);
        for (unsigned i = 0; i < e; ++i) coeff *= ck;
        total += e * (n / 2);
      } else {
        rest = rest * ZetaMonomial::zeta(n, e);
      }
    }
    if (total > 0) {
      coeff /= even_zeta_ratio(total);
      rest = rest * ZetaMonomial::zeta(2 * total);
    }
    out.add_term(rest, coeff);
  }
  return out;
}

}  // namespace mzstar
