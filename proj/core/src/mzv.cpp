#include "mzstar/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mzstar/error.hpp"
#include "mzstar/special_functions.hpp"

namespace mzstar {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int k : parts_) {
    if (k < 1) throw DomainError("Composition: parts must be positive");
  }
}

int Composition::weight() const {
  int w = 0;
  for (int k : parts_) w += k;
  return w;
}

int Composition::height() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int k) { return k >= 2; }));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Composition Composition::parse(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    body += ch;
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("Composition::parse: bad part '" + item + "' in " + text);
    }
    parts.push_back(std::stoi(item));
  }
  if (parts.empty()) throw DomainError("Composition::parse: empty composition");
  return Composition(std::move(parts));
}

void SumKey::validate() const {
  if (!is_valid()) {
    throw DomainError("SumKey " + to_string() + " violates k >= n + s, n >= s >= 1");
  }
}

std::string SumKey::to_string() const {
  return "(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(s) + ")";
}

namespace {

void enumerate_rec(int weight_left, int depth_left, int height_left, std::vector<int>& prefix,
                   std::vector<Composition>& out) {
  if (depth_left == 0) {
    if (weight_left == 0 && height_left == 0) out.emplace_back(prefix);
    return;
  }
  // remaining parts: each >= 1, height_left of them >= 2
  const int lo = prefix.empty() ? 2 : 1;
  for (int k = lo; k <= weight_left; ++k) {
    const int h = height_left - (k >= 2 ? 1 : 0);
    if (h < 0 || h > depth_left - 1) continue;
    const int rest = weight_left - k;
    if (rest < (depth_left - 1) + h) continue;
    prefix.push_back(k);
    enumerate_rec(rest, depth_left - 1, h, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(const SumKey& key) {
  key.validate();
  std::vector<Composition> out;
  std::vector<int> prefix;
  enumerate_rec(key.k, key.n, key.s, prefix, out);
  return out;
}

nlohmann::json MzvResult::to_json(int digits) const {
  return {{"value", value.to_string(digits)},
          {"error_estimate", error_estimate},
          {"N", N},
          {"precision_bits", precision_bits}};
}

namespace {

void require_admissible(const Composition& c) {
  if (!c.is_admissible()) throw DomainError("composition " + c.to_string() + " is not admissible (k1 >= 2 required)");
}

std::string word_of(const Composition& c) {
  std::string w;
  for (int k : c.parts()) {
    w.append(static_cast<std::size_t>(k - 1), '0');
    w.push_back('1');
  }
  return w;
}

// Reverse and swap letters.
std::string dual_word(const std::string& w) {
  std::string d(w.rbegin(), w.rend());
  for (char& ch : d) ch = ch == '0' ? '1' : '0';
  return d;
}

// Each merge of adjacent parts (2^(n-1) of them) as a composition.
std::vector<Composition> coarsenings(const Composition& c) {
  const auto& p = c.parts();
  const std::size_t gaps = p.size() - 1;
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << gaps);
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
    std::vector<int> parts{p[0]};
    for (std::size_t i = 0; i < gaps; ++i) {
      if (mask >> i & 1U) {
        parts.back() += p[i + 1];
      } else {
        parts.push_back(p[i + 1]);
      }
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

// ζ(w) = Σ_i Li_{dual(w[:i])}(1/2)·Li_{w[i:]}(1/2), with
// Li_w(1/2) = Σ_n c_w(n)/2ⁿ and c_{0w}(n) = c_w(n)/n, c_{1w}(n) = Σ_{m<n} c_w(m)/n.
class HolderEngine {
 public:
  explicit HolderEngine(long precision_bits) : prec_(precision_bits), wp_(precision_bits + 32) {}

  BigReal zeta(const Composition& c) {
    std::lock_guard lock(mutex_);
    prepare({c});
    return zeta_cache_.at(c).with_precision(prec_);
  }

  BigReal zeta_star(const Composition& c) {
    std::lock_guard lock(mutex_);
    return star_locked(c).with_precision(prec_);
  }

  BigReal x_sum(const SumKey& key, bool star) {
    std::lock_guard lock(mutex_);
    auto& cache = star ? x_star_cache_ : x_cache_;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto comps = enumerate_compositions(key);
    if (star) {
      std::vector<Composition> all;
      for (const auto& c : comps) {
        auto m = coarsenings(c);
        all.insert(all.end(), m.begin(), m.end());
      }
      prepare(all);
    } else {
      prepare(comps);
    }
    BigReal sum(0L, wp_);
    for (const auto& c : comps) sum += star ? star_locked(c) : zeta_cache_.at(c);
    BigReal out = sum.with_precision(prec_);
    cache.emplace(key, out);
    return out;
  }

 private:
  BigReal star_locked(const Composition& c) {
    auto it = star_cache_.find(c);
    if (it != star_cache_.end()) return it->second;
    const auto merged = coarsenings(c);
    prepare(merged);
    BigReal sum(0L, wp_);
    for (const auto& m : merged) sum += zeta_cache_.at(m);
    star_cache_.emplace(c, sum);
    return sum;
  }

  // Ensures zeta_cache_ holds every composition in `comps`.
  void prepare(const std::vector<Composition>& comps) {
    std::vector<const Composition*> todo;
    std::vector<std::string> words;
    for (const auto& c : comps) {
      if (zeta_cache_.count(c)) continue;
      todo.push_back(&c);
      const std::string w = word_of(c);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        words.push_back(dual_word(w.substr(0, i)));
        words.push_back(w.substr(i));
      }
    }
    if (todo.empty()) return;
    ensure_words(words);
    for (const Composition* c : todo) {
      if (zeta_cache_.count(*c)) continue;
      const std::string w = word_of(*c);
      BigReal sum(0L, wp_);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        sum += li(dual_word(w.substr(0, i))) * li(w.substr(i));
      }
      zeta_cache_.emplace(*c, sum);
    }
  }

  BigReal li(const std::string& w) const {
    if (w.empty()) return BigReal(1L, wp_);
    return li_cache_.at(w);
  }

  void ensure_words(const std::vector<std::string>& words) {
    std::unordered_set<std::string> missing;
    std::size_t max_len = 0;
    for (const auto& w : words) {
      if (w.empty() || li_cache_.count(w)) continue;
      if (w.back() != '1') throw Error("HolderEngine: word " + w + " does not end in 1");
      missing.insert(w);
      max_len = std::max(max_len, w.size());
    }
    if (missing.empty()) return;
    relevant_.clear();
    for (const auto& w : missing) {
      for (std::size_t i = 0; i < w.size(); ++i) relevant_.insert(w.substr(i));
    }
    terms_ = static_cast<std::size_t>(wp_) + 5 * max_len + 16;
    std::vector<BigReal> root(terms_ + 1, BigReal(0L, wp_));
    root[0] = BigReal(1L, wp_);
    visit(std::string(), root, missing);
  }

  void visit(const std::string& w, const std::vector<BigReal>& c, const std::unordered_set<std::string>& missing) {
    for (char letter : {'0', '1'}) {
      std::string child = letter + w;
      if (!relevant_.count(child)) continue;
      std::vector<BigReal> cc(terms_ + 1, BigReal(0L, wp_));
      if (letter == '0') {
        for (std::size_t n = 1; n <= terms_; ++n) cc[n] = c[n] / static_cast<long>(n);
      } else {
        BigReal running(0L, wp_);
        for (std::size_t n = 1; n <= terms_; ++n) {
          running += c[n - 1];
          cc[n] = running / static_cast<long>(n);
        }
      }
      if (missing.count(child)) {
        BigReal value(0L, wp_);
        for (std::size_t n = 1; n <= terms_; ++n) value += ldexp(cc[n], -static_cast<long>(n));
        li_cache_.emplace(child, value);
      }
      visit(child, cc, missing);
    }
  }

  long prec_;
  long wp_;
  std::size_t terms_ = 0;
  std::mutex mutex_;
  std::unordered_set<std::string> relevant_;
  std::unordered_map<std::string, BigReal> li_cache_;
  std::map<Composition, BigReal> zeta_cache_;
  std::map<Composition, BigReal> star_cache_;
  std::map<SumKey, BigReal> x_cache_;
  std::map<SumKey, BigReal> x_star_cache_;
};

HolderEngine& engine_for(long precision_bits) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<HolderEngine>> engines;
  std::lock_guard lock(mutex);
  auto& slot = engines[precision_bits];
  if (!slot) slot = std::make_unique<HolderEngine>(precision_bits);
  return *slot;
}

// Nested sums split by how many leading indices exceed N: the part with all
// indices <= N is a cumulative-sum DP, the one-index tail is a Hurwitz zeta
// value, and deeper tails use the iterated-integral approximation
// ∫_{x₁>=…>=x_j>=X} Π xᵢ^(-kᵢ) = X^(j-K_j) / Π_{i<=j} (K_i - i), X = N + 1/2.
MzvResult truncated_nested(const Composition& c, bool star, unsigned long N, long precision_bits) {
  if (N < 10) throw DomainError("truncated MZV: N must be at least 10");
  const long wp = precision_bits + 32;
  const auto& k = c.parts();
  const std::size_t n = k.size();

  std::vector<BigReal> inv(N + 1, BigReal(0L, wp));
  for (unsigned long m = 1; m <= N; ++m) inv[m] = BigReal(1L, wp) / static_cast<long>(m);

  // head[j] = partial sum over the suffix (k_{j+1}, …, k_n) with all indices <= N.
  std::vector<BigReal> head(n + 1, BigReal(1L, wp));
  std::vector<BigReal> cumulative(N + 1, BigReal(1L, wp));  // suffix DP, "1" for the empty suffix
  for (std::size_t idx = n; idx-- > 0;) {
    std::vector<BigReal> next(N + 1, BigReal(0L, wp));
    BigReal running(0L, wp);
    for (unsigned long m = 1; m <= N; ++m) {
      const BigReal& inner = star ? cumulative[m] : cumulative[m - 1];
      if (!inner.is_zero()) running += pow(inv[m], static_cast<long>(k[idx])) * inner;
      next[m] = running;
    }
    cumulative = std::move(next);
    cumulative[0] = BigReal(0L, wp);
    head[idx] = cumulative[N];
  }

  BigReal total = head[0];
  double err = 0;
  const BigReal x_mid = BigReal(static_cast<long>(N), wp) + BigReal(0.5, wp);
  int partial = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    partial += k[j - 1];
    BigReal tail(wp);
    if (j == 1) {
      tail = hurwitz_zeta(BigReal(static_cast<long>(k[0]), wp), BigReal(static_cast<long>(N + 1), wp));
    } else {
      long denom = 1;
      int run = 0;
      for (std::size_t i = 1; i <= j; ++i) {
        run += k[i - 1];
        denom *= run - static_cast<long>(i);
      }
      tail = pow(x_mid, static_cast<long>(j) - partial) / denom;
      err += (tail * head[j]).to_double() * static_cast<double>(j * partial) / x_mid.to_double();
    }
    total += tail * head[j];
  }
  MzvResult r;
  r.value = total.with_precision(precision_bits);
  r.error_estimate = std::max(err, std::ldexp(1.0, static_cast<int>(8 - precision_bits)));
  r.N = N;
  r.precision_bits = precision_bits;
  return r;
}

MzvResult holder_result(BigReal value, long precision_bits) {
  MzvResult r;
  r.error_estimate = std::ldexp(std::abs(value.to_double()) + 1.0, static_cast<int>(8 - precision_bits));
  r.value = std::move(value);
  r.N = 0;
  r.precision_bits = precision_bits;
  return r;
}

MzvResult numeric(const Composition& c, bool star, const MzvOptions& opts) {
  require_admissible(c);
  if (opts.method == MzvMethod::truncated) return truncated_nested(c, star, opts.trunc_N, opts.precision_bits);
  auto& engine = engine_for(opts.precision_bits);
  return holder_result(star ? engine.zeta_star(c) : engine.zeta(c), opts.precision_bits);
}

MzvResult sum_over_key(const SumKey& key, bool star, const MzvOptions& opts) {
  key.validate();
  if (opts.method == MzvMethod::holder) {
    return holder_result(engine_for(opts.precision_bits).x_sum(key, star), opts.precision_bits);
  }
  MzvResult total;
  total.value = BigReal(0L, opts.precision_bits);
  total.N = opts.trunc_N;
  total.precision_bits = opts.precision_bits;
  for (const auto& c : enumerate_compositions(key)) {
    MzvResult r = numeric(c, star, opts);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
  }
  return total;
}

void require_generating_domain(const BigReal& u, const BigReal& v, const BigReal& t, const char* who) {
  for (const BigReal* x : {&u, &v, &t}) {
    if (abs(*x).to_double() > 0.25) throw DomainError(std::string(who) + ": |u|, |v|, |t| must be <= 1/4");
  }
}

TruncatedValue generating_function(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                                   long precision_bits, bool star) {
  if (max_weight < 2) throw DomainError("generating function: max_weight must be >= 2");
  const long wp = precision_bits + 16;
  const BigReal uw = u.with_precision(wp), vw = v.with_precision(wp), tw = t.with_precision(wp);
  const BigReal t_step = star ? tw * tw : tw;
  MzvOptions opts;
  opts.precision_bits = wp;
  BigReal total(0L, wp);
  std::vector<double> layers;
  for (int k = 2; k <= max_weight; ++k) {
    BigReal layer(0L, wp);
    for (int n = 1; n < k; ++n) {
      for (int s = 1; s <= n && n + s <= k; ++s) {
        const SumKey key{k, n, s};
        BigReal x = star ? x_star_sum(key, opts).value : x_sum(key, opts).value;
        layer += x * pow(uw, static_cast<long>(k - n - s)) * pow(vw, static_cast<long>(n - s)) *
                 pow(t_step, static_cast<long>(s - 1));
      }
    }
    layers.push_back(std::abs(layer.to_double()));
    total += layer;
  }
  TruncatedValue out;
  out.value = total.with_precision(precision_bits);
  if (layers.size() >= 2 && layers[layers.size() - 2] > 0) {
    const double ratio = std::min(0.9, layers.back() / layers[layers.size() - 2]);
    out.tail_estimate = layers.back() * ratio / (1 - ratio);
  }
  return out;
}

}  // namespace

MzvResult mzv_numeric(const Composition& c, const MzvOptions& opts) { return numeric(c, false, opts); }
MzvResult mzsv_numeric(const Composition& c, const MzvOptions& opts) { return numeric(c, true, opts); }
MzvResult x_star_sum(const SumKey& key, const MzvOptions& opts) { return sum_over_key(key, true, opts); }
MzvResult x_sum(const SumKey& key, const MzvOptions& opts) { return sum_over_key(key, false, opts); }

TruncatedValue phi_star_truncated(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                                  long precision_bits) {
  require_generating_domain(u, v, t, "phi_star_truncated");
  return generating_function(u, v, t, max_weight, precision_bits, true);
}

TruncatedValue phi_truncated(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                             long precision_bits) {
  require_generating_domain(u, v, t, "phi_truncated");
  return generating_function(u, v, t, max_weight, precision_bits, false);
}

VerificationReport ohno_zagier_check(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                                     double tolerance, long precision_bits) {
  require_generating_domain(u, v, t, "ohno_zagier_check");
  const long wp = precision_bits + 32;
  const BigReal uw = u.with_precision(wp), vw = v.with_precision(wp), tw = t.with_precision(wp);
  const BigReal denom = uw * vw - tw;
  if (abs(denom).to_double() < 1e-3) throw DomainError("ohno_zagier_check: |uv - t| must be >= 1e-3");

  // Convergence radius of Σ ζ(n)/n xⁿ over x ∈ {u, v, α, β}.
  const double e1 = (uw + vw).to_double(), e2 = tw.to_double();
  const double disc = e1 * e1 - 4 * e2;
  const double root_mod = disc >= 0 ? (std::abs(e1) + std::sqrt(disc)) / 2 : std::sqrt(std::abs(e2));
  const double rho = std::max({std::abs(uw.to_double()), std::abs(vw.to_double()), root_mod});
  if (rho >= 0.95) throw DomainError("ohno_zagier_check: roots too large for the log series");
  const long nmax = static_cast<long>(std::ceil((wp + 16) * std::log(2.0) / -std::log(rho))) + 2;

  BigReal p_prev(2L, wp), p_cur = uw + vw;  // p₀, p₁ of α, β
  const BigReal s1 = uw + vw;
  BigReal u_pow = uw, v_pow = vw;
  BigReal exponent(0L, wp);
  for (long n = 2; n <= nmax; ++n) {
    BigReal p_next = s1 * p_cur - tw * p_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    u_pow *= uw;
    v_pow *= vw;
    exponent += zeta_value(static_cast<unsigned>(n), wp) / n * (u_pow + v_pow - p_cur);
  }
  const BigReal rhs = (BigReal(1L, wp) - exp(exponent)) / denom;
  const TruncatedValue lhs = phi_truncated(u, v, t, max_weight, precision_bits);

  VerificationReport r = make_report("ohno-zagier", {{"u", u}, {"v", v}, {"t", t}}, lhs.value,
                                     rhs.with_precision(precision_bits), tolerance);
  r.notes.push_back("max_weight=" + std::to_string(max_weight));
  std::ostringstream os;
  os << "tail_estimate=" << lhs.tail_estimate;
  r.notes.push_back(os.str());
  return r;
}

}  // namespace mzstar
