#pragma once

#include <cstdint>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mzstar/error.hpp"
#include "mzstar/mzv.hpp"
#include "mzstar/report.hpp"
#include "mzstar/series.hpp"
#include "mzstar/zeta_poly.hpp"

namespace mzstar {

inline constexpr int kDefaultExpansionDegree = 11;

/// A pipeline step aborted (failed exact division, γ residue, π-degree mismatch).
class PipelineError : public Error {
 public:
  PipelineError(const std::string& step, const std::string& what) : Error(step + ": " + what), step_(step) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

/// One logged step of the expansion pipeline.
struct PipelineStep {
  std::string step;
  std::string check;  ///< "exact-division", "gamma-cancellation", "pi-degree", "grading", ...
  std::string detail;
  int input_order = 0;
  int output_order = 0;
  std::size_t terms = 0;
  bool ok = false;

  nlohmann::json to_json() const;
};

struct ExpansionResult {
  /// u·Φ₀⋆(−u,v,t) − v·Φ₀⋆(−v,u,t) through total degree max_total_degree (w = t²).
  ZetaSeries series{0};
  int max_total_degree = 0;
  bool gamma_free = false;
  bool weight_graded = false;
  std::vector<PipelineStep> divisibility_log;

  nlohmann::json to_json() const;
  static ExpansionResult from_json(const nlohmann::json& j);
};

/// Expands (u−v)/(ab) + A(u,v,a,b)·Γ(a)Γ(1−a)Γ(b)Γ(1−b)Γ(u+a)Γ(u+b)/(Γ(u)Γ(v)),
/// a + b = v − u, ab = −(uv + w), as an exact series. Every exact division,
/// the γ cancellation and the π bookkeeping are logged; any failure throws
/// PipelineError naming the step. Even-zeta products are folded into single
/// ζ(2K) throughout (ZetaPoly::fold_even_zetas).
ExpansionResult expand_theorem_rhs(int max_total_degree = kDefaultExpansionDegree);

/// Memoized expansion at least `min_degree` deep (and at least the default).
std::shared_ptr<const ExpansionResult> shared_expansion(int min_degree = kDefaultExpansionDegree);

struct DifferencePoly {
  int m = 0;
  int n = 0;
  int s = 0;
  /// (−1)^m X₀⋆(m+n+1, n+1, s) − (−1)^n X₀⋆(m+n+1, m+1, s).
  ZetaPoly poly;

  nlohmann::json to_json() const;
};

/// (−1)^s × coefficient of u^(m+1−s) v^(n+1−s) w^(s−1). Requires m, n >= s >= 1;
/// throws DomainError if m + n exceeds the expansion degree.
DifferencePoly difference_poly(int m, int n, int s, const ExpansionResult& expansion);
DifferencePoly difference_poly(int m, int n, int s);

/// X₀⋆(k, s, s): (−1)^k × coefficient of u^(k−2s+1) w^(s−1). Requires k >= 2s, s >= 1.
ZetaPoly diagonal_poly(int k, int s, const ExpansionResult& expansion);
ZetaPoly diagonal_poly(int k, int s);

/// Numeric X₀⋆ oracle used by the cross-validations. Nested sums at N = 1e5
/// are off by up to ~1e-7 at weight 8 once several trailing 1s are present,
/// so the default is the Hölder evaluator.
struct OracleOptions {
  long precision_bits = kDefaultPrecisionBits;
  MzvMethod method = MzvMethod::holder;
  unsigned long trunc_N = 100000;
  double tolerance = 1e-8;
};

/// zp_eval(difference_poly(m,n,s)) against numeric X₀⋆ values.
VerificationReport cross_validate(int m, int n, int s, const OracleOptions& oracle = {});
/// zp_eval(diagonal_poly(k,s)) against a numeric X₀⋆(k,s,s).
VerificationReport diagonal_validate(int k, int s, const OracleOptions& oracle = {});

/// Structural properties of an expansion.
struct StructuralSummary {
  bool gamma_free = false;
  bool gamma_series_zero = false;  ///< intermediate γ-linear series vanished
  bool weight_graded = false;
  bool divisions_exact = false;
  bool antisymmetric = false;
  std::size_t divisions = 0;
  std::size_t antisymmetry_pairs = 0;
  std::vector<std::string> failures;

  bool pass() const {
    return gamma_free && gamma_series_zero && weight_graded && divisions_exact && antisymmetric;
  }
};

StructuralSummary structural_checks(const ExpansionResult& expansion);

/// Taylor coefficients c[i][j] (u^i v^j, i, j < nodes) of height_one_rhs, by
/// tensor interpolation at Chebyshev nodes on [−hu, hu] × [−hv, hv].
std::vector<std::vector<BigReal>> height_one_taylor(double hu, double hv, int nodes, long precision_bits);

/// zp_eval(difference_poly(m,n,1)) against −c[m][n] from height_one_taylor on
/// `grids` seeded grids, for all m, n >= 1 with m + n + 1 <= max_weight.
std::vector<VerificationReport> height_one_consistency(std::uint64_t seed, int grids = 3, int max_weight = 8,
                                                       double tolerance = 1e-6);

struct KoTableEntry {
  std::string kind;  ///< "difference" or "diagonal"
  int m = 0;         ///< k for diagonals
  int n = 0;         ///< unused for diagonals
  int s = 0;
  ZetaPoly poly;
  VerificationReport check;
};

/// Every difference (m, n >= s, m+n+1 <= max_weight) and diagonal (2s <= k <= max_weight),
/// each cross-validated. With a nested-sum oracle, weights above `truncated_limit`
/// fall back to the Hölder evaluator.
std::vector<KoTableEntry> ko_table(int max_weight, const OracleOptions& oracle = {}, int truncated_limit = 9);

}  // namespace mzstar
