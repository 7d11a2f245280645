#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mzstar/error.hpp"
#include "mzstar/rational.hpp"
#include "mzstar/zeta_poly.hpp"

namespace mzstar {

/// Monomial u^eu v^ev w^ew, where w stands for t². The grading used for
/// truncation is the degree in t: deg = eu + ev + 2 ew.
struct Monomial {
  std::uint16_t eu = 0;
  std::uint16_t ev = 0;
  std::uint16_t ew = 0;

  int degree() const { return eu + ev + 2 * ew; }
  Monomial operator*(const Monomial& o) const {
    return {static_cast<std::uint16_t>(eu + o.eu), static_cast<std::uint16_t>(ev + o.ev),
            static_cast<std::uint16_t>(ew + o.ew)};
  }
  bool divides(const Monomial& o) const { return eu <= o.eu && ev <= o.ev && ew <= o.ew; }
  Monomial operator/(const Monomial& o) const {
    return {static_cast<std::uint16_t>(eu - o.eu), static_cast<std::uint16_t>(ev - o.ev),
            static_cast<std::uint16_t>(ew - o.ew)};
  }
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: by degree, then u > v > w lexicographically
/// (higher u exponent first within a degree).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::tie(b.eu, b.ev, b.ew) < std::tie(a.eu, a.ev, a.ew);
  }
};

/// Coefficient-ring adapter. Specialized for Rational and ZetaPoly.
template <class R>
struct CoefficientRing;

template <>
struct CoefficientRing<Rational> {
  static constexpr std::string_view name = "rational";
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  /// The constant as a rational, if the coefficient is one.
  static bool as_rational(const Rational& c, Rational& out) {
    out = c;
    return true;
  }
  static nlohmann::json to_json(const Rational& c) { return to_string(c); }
  static Rational from_json(const nlohmann::json& j) { return parse_rational(j.get<std::string>()); }
};

template <>
struct CoefficientRing<ZetaPoly> {
  static constexpr std::string_view name = "zeta_poly";
  static bool is_zero(const ZetaPoly& c) { return c.is_zero(); }
  static ZetaPoly from_rational(const Rational& q) { return ZetaPoly(q); }
  static bool as_rational(const ZetaPoly& c, Rational& out) {
    if (!c.is_constant()) return false;
    out = c.constant_term();
    return true;
  }
  static nlohmann::json to_json(const ZetaPoly& c) { return c.to_json(); }
  static ZetaPoly from_json(const nlohmann::json& j) { return ZetaPoly::from_json(j); }
};

/// Truncated formal power series in u, v, w over the exact ring R.
///
/// Terms of degree > order() are never stored, zero coefficients are pruned,
/// and binary operations truncate to the smaller of the two orders.
template <class R>
class Series {
 public:
  using Ring = CoefficientRing<R>;
  using Terms = std::map<Monomial, R, GradedLex>;

  explicit Series(int order) : order_(order) {
    if (order < 0) throw DomainError("Series: negative order");
  }

  static Series constant(const R& c, int order) {
    Series s(order);
    s.add_term({}, c);
    return s;
  }
  static Series one(int order) { return constant(Ring::from_rational(1), order); }
  static Series monomial(Monomial m, const R& c, int order) {
    Series s(order);
    s.add_term(m, c);
    return s;
  }
  static Series u(int order) { return monomial({1, 0, 0}, Ring::from_rational(1), order); }
  static Series v(int order) { return monomial({0, 1, 0}, Ring::from_rational(1), order); }
  static Series w(int order) { return monomial({0, 0, 1}, Ring::from_rational(1), order); }

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Ring::from_rational(0) : it->second;
  }
  R constant_term() const { return coefficient({}); }

  /// Adds c·m in place; ignored when deg(m) > order.
  void add_term(const Monomial& m, const R& c) {
    if (m.degree() > order_ || Ring::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Ring::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Smallest degree present (order()+1 for the zero series).
  int min_degree() const { return terms_.empty() ? order_ + 1 : terms_.begin()->first.degree(); }

  Series homogeneous_part(int degree) const {
    Series out(order_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == degree) out.terms_.emplace(m, c);
    }
    return out;
  }

  Series truncated(int new_order) const {
    Series out(std::min(order_, new_order));
    for (const auto& [m, c] : terms_) {
      if (m.degree() <= out.order_) out.terms_.emplace(m, c);
    }
    return out;
  }

  Series operator-() const {
    Series out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out = a.truncated(b.order_);
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series out = a.truncated(b.order_);
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order_, b.order_));
    for (const auto& [ma, ca] : a.terms_) {
      const int room = out.order_ - ma.degree();
      if (room < 0) break;  // terms are sorted by degree
      for (const auto& [mb, cb] : b.terms_) {
        if (mb.degree() > room) break;
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }
  /// Scalar multiple.
  friend Series operator*(const Series& a, const R& c) {
    Series out(a.order_);
    if (Ring::is_zero(c)) return out;
    for (const auto& [m, x] : a.terms_) out.add_term(m, x * c);
    return out;
  }
  friend Series operator*(const R& c, const Series& a) { return a * c; }

  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  /// Exact equality of order and coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Canonical JSON: {"ring", "order", "terms": [{eu, ev, ew, coeff}, ...]}
  /// with terms in graded-lexicographic order.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
      arr.push_back({{"eu", m.eu}, {"ev", m.ev}, {"ew", m.ew}, {"coeff", Ring::to_json(c)}});
    }
    return {{"ring", std::string(Ring::name)}, {"order", order_}, {"terms", arr}};
  }

  static Series from_json(const nlohmann::json& j) {
    if (j.at("ring").get<std::string>() != Ring::name) {
      throw RingMismatchError("Series::from_json: expected ring " + std::string(Ring::name) + ", got " +
                              j.at("ring").get<std::string>());
    }
    Series s(j.at("order").get<int>());
    for (const auto& t : j.at("terms")) {
      Monomial m{t.at("eu").get<std::uint16_t>(), t.at("ev").get<std::uint16_t>(), t.at("ew").get<std::uint16_t>()};
      s.add_term(m, Ring::from_json(t.at("coeff")));
    }
    return s;
  }

 private:
  int order_;
  Terms terms_;
};

using RationalSeries = Series<Rational>;
using ZetaSeries = Series<ZetaPoly>;

/// Applies f to every coefficient (zero results are pruned).
template <class R, class F>
Series<R> map_coefficients(const Series<R>& s, F f) {
  Series<R> out(s.order());
  for (const auto& [m, c] : s.terms()) out.add_term(m, f(c));
  return out;
}

/// Splits s into homogeneous components indexed 0..order.
template <class R>
std::vector<Series<R>> homogeneous_components(const Series<R>& s) {
  std::vector<Series<R>> parts(s.order() + 1, Series<R>(s.order()));
  for (const auto& [m, c] : s.terms()) parts[m.degree()].add_term(m, c);
  return parts;
}

/// exp(s) for s with zero constant term. Uses the Euler-operator recurrence
/// d·E_d = Σ_{j=1..d} j·s_j·E_{d-j} on homogeneous components, which equals
/// the truncated exponential sum Σ s^k/k!.
template <class R>
Series<R> series_exp(const Series<R>& s) {
  using Ring = CoefficientRing<R>;
  if (!Ring::is_zero(s.constant_term())) throw DomainError("series_exp: nonzero constant term");
  const int n = s.order();
  auto parts = homogeneous_components(s);
  std::vector<Series<R>> e(n + 1, Series<R>(n));
  e[0] = Series<R>::one(n);
  for (int d = 1; d <= n; ++d) {
    Series<R> acc(n);
    for (int j = 1; j <= d; ++j) {
      if (parts[j].is_zero() || e[d - j].is_zero()) continue;
      acc += parts[j] * e[d - j] * Ring::from_rational(Rational(j));
    }
    e[d] = acc * Ring::from_rational(Rational(1, d));
  }
  Series<R> out(n);
  for (const auto& part : e) out += part;
  return out;
}

/// Multiplicative inverse; the constant term must be a nonzero rational.
template <class R>
Series<R> series_invert(const Series<R>& s) {
  using Ring = CoefficientRing<R>;
  Rational c0;
  if (!Ring::as_rational(s.constant_term(), c0) || c0 == 0) {
    throw DomainError("series_invert: constant term is not an invertible rational");
  }
  const int n = s.order();
  const R inv0 = Ring::from_rational(1 / c0);
  auto parts = homogeneous_components(s);
  std::vector<Series<R>> q(n + 1, Series<R>(n));
  q[0] = Series<R>::constant(inv0, n);
  for (int d = 1; d <= n; ++d) {
    Series<R> acc(n);
    for (int j = 1; j <= d; ++j) {
      if (parts[j].is_zero() || q[d - j].is_zero()) continue;
      acc += parts[j] * q[d - j];
    }
    q[d] = -(acc * inv0);
  }
  Series<R> out(n);
  for (const auto& part : q) out += part;
  return out;
}

/// Exact quotient q with q·d = s. Let k be the lowest degree of d and d_k
/// its homogeneous part. Degree by degree, the lowest remaining homogeneous
/// part of s is divided by d_k with graded-lex leading-term elimination;
/// any residue raises NonDivisibleError. With both operands known to order
/// n, the quotient has order n - k.
template <class R>
Series<R> series_div_exact(const Series<R>& s, const Series<R>& d) {
  using Ring = CoefficientRing<R>;
  if (d.is_zero()) throw DomainError("series_div_exact: division by zero series");
  const int top = std::min(s.order(), d.order());
  const int k = d.min_degree();
  if (top < k) throw DomainError("series_div_exact: operand order below divisor degree");
  const int out_order = top - k;
  const Series<R> lead = d.homogeneous_part(k);
  // The leading monomial is the largest in the order, i.e. the map's last entry.
  const Monomial lead_mono = lead.terms().rbegin()->first;
  Rational lead_rational;
  if (!Ring::as_rational(lead.terms().rbegin()->second, lead_rational)) {
    throw DomainError("series_div_exact: leading coefficient of divisor is not rational");
  }
  const R lead_inverse = Ring::from_rational(1 / lead_rational);

  Series<R> remainder = s.truncated(top);
  Series<R> quotient(out_order);
  for (int deg = 0; deg <= top; ++deg) {
    Series<R> part = remainder.homogeneous_part(deg);
    if (part.is_zero()) continue;
    if (deg < k) {
      throw NonDivisibleError("series_div_exact: degree-" + std::to_string(deg) +
                              " residue below the divisor degree " + std::to_string(k));
    }
    Series<R> h(top);
    while (!part.is_zero()) {
      const Monomial m = part.terms().rbegin()->first;
      const R c = part.terms().rbegin()->second;
      if (!lead_mono.divides(m)) {
        throw NonDivisibleError("series_div_exact: residue term u^" + std::to_string(m.eu) + " v^" +
                                std::to_string(m.ev) + " w^" + std::to_string(m.ew) +
                                " is not divisible by the divisor's leading monomial");
      }
      Series<R> step = Series<R>::monomial(m / lead_mono, c * lead_inverse, top);
      part = part - step * lead;
      h += step;
    }
    quotient += h.truncated(out_order);
    remainder = remainder - h * d;
  }
  return quotient;
}

/// Power sums p_n = aⁿ + bⁿ (n = 1..nmax) of the roots of x² - e1·x + e2
/// by Newton's identities: p1 = e1, p2 = e1² - 2e2, pn = e1·p(n-1) - e2·p(n-2).
template <class R>
std::vector<Series<R>> power_sums(const Series<R>& e1, const Series<R>& e2, int nmax) {
  using Ring = CoefficientRing<R>;
  if (nmax < 1) throw DomainError("power_sums: nmax must be >= 1");
  std::vector<Series<R>> p;
  p.reserve(nmax + 1);
  p.push_back(Series<R>::constant(Ring::from_rational(2), std::min(e1.order(), e2.order())));
  p.push_back(e1);
  for (int n = 2; n <= nmax; ++n) {
    if (n == 2) {
      p.push_back(e1 * e1 - e2 * Ring::from_rational(2));
    } else {
      p.push_back(e1 * p[n - 1] - e2 * p[n - 2]);
    }
  }
  p.erase(p.begin());
  return p;
}

/// Σ_k coeffs[k]·X^k for X with zero constant term (Horner).
template <class R>
Series<R> compose_univariate(const std::vector<R>& coeffs, const Series<R>& x) {
  using Ring = CoefficientRing<R>;
  if (!Ring::is_zero(x.constant_term())) throw DomainError("compose_univariate: argument has a constant term");
  Series<R> acc(x.order());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + Series<R>::constant(*it, x.order());
  }
  return acc;
}

}  // namespace mzstar
