#include "mzstar/report.hpp"

#include <algorithm>

#include <sstream>

#include "mzstar/error.hpp"

namespace mzstar {

void VerificationReport::finalize() {
  residual = abs(lhs - rhs);
  precision_bits = std::min(lhs.precision(), rhs.precision());
  pass = residual.is_finite() && residual.to_double() <= tolerance;
}

const BigReal& VerificationReport::input(const std::string& name) const {
  for (const auto& [key, value] : inputs) {
    if (key == name) return value;
  }
  throw DomainError("VerificationReport: no input named " + name);
}

nlohmann::json VerificationReport::to_json(int digits) const {
  nlohmann::json in = nlohmann::json::object();
  for (const auto& [key, value] : inputs) in[key] = value.to_string(digits);
  return {{"identity", identity},
          {"inputs", in},
          {"lhs", lhs.to_string(digits)},
          {"rhs", rhs.to_string(digits)},
          {"residual", residual.to_string(6)},
          {"tolerance", tolerance},
          {"pass", pass},
          {"precision_bits", precision_bits},
          {"notes", notes}};
}

std::string VerificationReport::to_text(int digits) const {
  std::ostringstream os;
  os << identity << " [";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) os << ", ";
    os << inputs[i].first << "=" << inputs[i].second.to_string(8);
  }
  os << "] lhs=" << lhs.to_string(digits) << " rhs=" << rhs.to_string(digits) << " residual=" << residual.to_string(3)
     << " tol=" << tolerance << (pass ? " PASS" : " FAIL");
  for (const auto& n : notes) os << " (" << n << ")";
  return os.str();
}

VerificationReport make_report(std::string identity, std::vector<std::pair<std::string, BigReal>> inputs,
                               BigReal lhs, BigReal rhs, double tolerance) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.inputs = std::move(inputs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.tolerance = tolerance;
  r.finalize();
  return r;
}

bool report_less(const VerificationReport& x, const VerificationReport& y) {
  if (x.identity != y.identity) return x.identity < y.identity;
  for (std::size_t i = 0; i < std::min(x.inputs.size(), y.inputs.size()); ++i) {
    if (x.inputs[i].second < y.inputs[i].second) return true;
    if (y.inputs[i].second < x.inputs[i].second) return false;
  }
  return x.inputs.size() < y.inputs.size();
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), report_less);
}

}  // namespace mzstar
