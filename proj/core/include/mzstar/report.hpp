#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "mzstar/big_real.hpp"

namespace mzstar {

/// Outcome of one identity check at one input point.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, BigReal>> inputs;
  BigReal lhs;
  BigReal rhs;
  BigReal residual;  ///< |lhs - rhs|
  double tolerance = 0;
  bool pass = false;
  long precision_bits = 0;
  std::vector<std::string> notes;

  /// Fills residual and pass from lhs, rhs and tolerance.
  void finalize();

  /// Value of a named input; throws DomainError if absent.
  const BigReal& input(const std::string& name) const;

  nlohmann::json to_json(int digits = 40) const;
  /// One line: "identity [u=..., v=...] residual=... tol=... PASS".
  std::string to_text(int digits = 25) const;
};

/// Builds a finalized report.
VerificationReport make_report(std::string identity, std::vector<std::pair<std::string, BigReal>> inputs,
                               BigReal lhs, BigReal rhs, double tolerance);

/// Orders by identity name, then lexicographically by input values.
bool report_less(const VerificationReport& x, const VerificationReport& y);

/// Stable sort with report_less.
void sort_reports(std::vector<VerificationReport>& reports);

}  // namespace mzstar
