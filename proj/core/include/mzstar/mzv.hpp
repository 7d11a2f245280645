#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mzstar/big_real.hpp"
#include "mzstar/report.hpp"

namespace mzstar {

/// Index sequence (k₁, …, kₙ) of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  /// Number of parts >= 2.
  int height() const;
  /// Nonempty with k₁ >= 2.
  bool is_admissible() const { return !parts_.empty() && parts_.front() >= 2; }

  /// "(2,1,1)"
  std::string to_string() const;
  /// Parses "2,1,1" or "(2,1,1)"; throws DomainError.
  static Composition parse(const std::string& text);

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// (weight k, depth n, height s) with k >= n + s and n >= s >= 1.
struct SumKey {
  int k = 0;
  int n = 0;
  int s = 0;

  bool is_valid() const { return s >= 1 && n >= s && k >= n + s; }
  /// Throws DomainError unless is_valid().
  void validate() const;
  std::string to_string() const;
  auto operator<=>(const SumKey&) const = default;
};

/// All admissible compositions with the key's weight, depth and height,
/// in lexicographic order.
std::vector<Composition> enumerate_compositions(const SumKey& key);

enum class MzvMethod {
  holder,     ///< Hölder convolution of Li-words at z = 1/2 (full precision)
  truncated,  ///< nested partial sums to N plus tail terms (about 1e-10)
};

struct MzvOptions {
  long precision_bits = kDefaultPrecisionBits;
  MzvMethod method = MzvMethod::holder;
  unsigned long trunc_N = 100000;
};

struct MzvResult {
  BigReal value;
  double error_estimate = 0;
  unsigned long N = 0;  ///< truncation point (0 for holder)
  long precision_bits = 0;

  nlohmann::json to_json(int digits = 40) const;
};

/// ζ(k₁,…,kₙ) = Σ_{m₁>…>mₙ>0} Π mᵢ^(-kᵢ).
MzvResult mzv_numeric(const Composition& c, const MzvOptions& opts = {});
/// ζ⋆(k₁,…,kₙ) = Σ_{m₁>=…>=mₙ>=1} Π mᵢ^(-kᵢ).
MzvResult mzsv_numeric(const Composition& c, const MzvOptions& opts = {});

/// X₀⋆(k,n,s): sum of ζ⋆ over enumerate_compositions(key).
MzvResult x_star_sum(const SumKey& key, const MzvOptions& opts = {});
/// X₀(k,n,s): the same for ζ.
MzvResult x_sum(const SumKey& key, const MzvOptions& opts = {});

struct TruncatedValue {
  BigReal value;
  double tail_estimate = 0;
};

/// Σ X₀⋆(k,n,s) u^(k-n-s) v^(n-s) t^(2s-2) over keys with k <= max_weight.
/// The tail estimate extrapolates the last two weight layers geometrically.
TruncatedValue phi_star_truncated(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                                  long precision_bits = kDefaultPrecisionBits);

/// Σ X₀(k,n,s) u^(k-n-s) v^(n-s) tˢ⁻¹ (note: t, not t²) over k <= max_weight.
TruncatedValue phi_truncated(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                             long precision_bits = kDefaultPrecisionBits);

/// Truncated X₀ generating function against its closed form
/// (1 - exp(Σ_{n>=2} ζ(n)(uⁿ+vⁿ-αⁿ-βⁿ)/n)) / (uv - t), α+β = u+v, αβ = t.
/// Requires |u|,|v|,|t| <= 1/4 and |uv - t| >= 1e-3.
VerificationReport ohno_zagier_check(const BigReal& u, const BigReal& v, const BigReal& t, int max_weight,
                                     double tolerance, long precision_bits = kDefaultPrecisionBits);

}  // namespace mzstar
