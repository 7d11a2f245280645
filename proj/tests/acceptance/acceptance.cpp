// Runs acceptance criteria 1-11 and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mzstar/hyper.hpp"
#include "mzstar/identity.hpp"
#include "mzstar/ko_extract.hpp"
#include "mzstar/mzv.hpp"

namespace {

using namespace mzstar;

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kSamples = 100;
constexpr long kBits = 256;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> parts;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    parts.push_back(ok ? what : "FAILED " + what);
  }
  void note(const std::string& what) { parts.push_back(what); }
};

/// Reports named `identity`: exactly `count` of them, each run at no looser than
/// `tolerance` and at `kBits`, all passing.
void expect_reports(Outcome& o, const std::vector<VerificationReport>& reports, const std::string& identity,
                    std::size_t count, double tolerance, long bits = kBits) {
  std::size_t seen = 0, passed = 0;
  double worst = 0;
  bool tolerances_ok = true;
  std::string first_failure;
  for (const auto& r : reports) {
    if (r.identity != identity) continue;
    ++seen;
    tolerances_ok = tolerances_ok && r.tolerance <= tolerance && r.precision_bits >= bits;
    if (r.pass) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = " first failure: " + r.to_text(12);
    }
    worst = std::max(worst, r.residual.to_double());
  }
  const bool ok = seen == count && passed == seen && tolerances_ok;
  o.require(ok, identity + " " + std::to_string(passed) + "/" + std::to_string(count) + " <= " + sci(tolerance) +
                    " (max residual " + sci(worst) + ")" + (tolerances_ok ? "" : " tolerance/precision mismatch") +
                    first_failure);
}

SuiteConfig suite() {
  SuiteConfig c;
  c.samples = kSamples;
  c.seed = kSeed;
  c.precision_bits = kBits;
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void expect_runtime(Outcome& o, double elapsed, double budget) {
  std::ostringstream s;
  s.precision(3);
  s << elapsed << " s (budget " << budget << " s)";
  o.require(elapsed <= budget, s.str());
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_identity("lemma21", suite());
  const double elapsed = seconds_since(start);
  expect_reports(o, reports, "lemma21", kSamples, 1e-20);
  expect_runtime(o, elapsed, 10);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  SuiteConfig c = suite();
  c.max_weight = 14;
  const auto reports = run_identity("phi-agree", c);
  const double elapsed = seconds_since(start);
  expect_reports(o, reports, "phi-agree", kSamples, 1e-20);
  expect_reports(o, reports, "phi-3f2-vs-definition", 5, 1e-6);
  expect_reports(o, reports, "phi-ako-vs-definition", 5, 1e-6);
  for (const auto& r : reports) {
    if (r.identity.ends_with("-vs-definition")) {
      bool at_w14 = false;
      for (const auto& n : r.notes) at_w14 = at_w14 || n.find("max_weight 14") != std::string::npos;
      if (!at_w14) o.require(false, "truncation weight 14 not recorded: " + r.to_text(8));
    }
  }
  expect_runtime(o, elapsed, 300);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto reports = run_identity("theorem", suite());
  expect_reports(o, reports, "theorem", kSamples, 1e-20);
  expect_reports(o, reports, "theorem-definition", 5, 1e-4);
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* name : {"lemma42", "lemma43", "lemma44", "lemma45"}) {
    expect_reports(o, run_identity(name, suite()), name, kSamples, 1e-20);
  }
  const PartialFractionSummary pf = partial_fraction_check(kSeed, 1000);
  o.require(pf.points == 1000 && pf.failures == 0,
            "partial fractions exact at " + std::to_string(pf.points - pf.failures) + "/1000 rational points");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto reports = run_hyper_check("prop31", kSamples, kSeed, kBits, 1e-20);
  expect_reports(o, reports, "prop31", kSamples, 1e-20);

  // decomposition at 1e-15; Richardson limit within |ε| of the closed form
  std::size_t decomposition = 0, richardson = 0;
  bool ok = true;
  for (const auto& r : reports) {
    if (r.identity == "prop31-eps") {
      ++decomposition;
      ok = ok && r.pass && r.tolerance <= 1e-15;
    } else if (r.identity == "prop31-richardson") {
      ++richardson;
      const double eps = r.input("eps").to_double();
      ok = ok && r.pass && r.tolerance <= std::abs(eps) * (1 + 1e-12);
    }
  }
  o.require(ok && decomposition == 10 && richardson == 10,
            "epsilon probe at 1e-2, 1e-3: " + std::to_string(decomposition) + " decompositions, " +
                std::to_string(richardson) + " Richardson limits");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* name : {"gauss", "trans2", "trans1"}) {
    expect_reports(o, run_hyper_check(name, kSamples, kSeed, kBits, 1e-20), name, kSamples, 1e-20);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto reports = run_identity("height-one", suite());
  expect_reports(o, reports, "height-one", kSamples, 1e-20);
  expect_reports(o, reports, "height-one-vs-theorem", kSamples, 1e-20);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto e = shared_expansion(11);
  o.require(e->max_total_degree >= 11, "expanded to degree " + std::to_string(e->max_total_degree));
  const StructuralSummary st = structural_checks(*e);
  o.require(st.gamma_free, "gamma-free coefficients");
  o.require(st.gamma_series_zero, "intermediate gamma series zero");
  o.require(st.weight_graded, "weight = degree + 1");
  o.require(st.divisions_exact, std::to_string(st.divisions) + " exact divisions");
  o.require(st.antisymmetric, std::to_string(st.antisymmetry_pairs) + " antisymmetric pairs");
  for (const auto& f : st.failures) o.note(f);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t keys = 0, passed = 0;
  double worst = 0;
  for (int weight = 3; weight <= 8; ++weight) {
    for (int m = 1; m <= weight - 2; ++m) {
      const int n = weight - 1 - m;
      for (int s = 1; s <= std::min(m, n); ++s) {
        OracleOptions oracle;
        oracle.tolerance = 1e-8;
        const VerificationReport r = cross_validate(m, n, s, oracle);
        ++keys;
        if (r.pass) ++passed;
        else o.note("failed " + r.to_text(12));
        worst = std::max(worst, r.residual.to_double());
      }
    }
  }
  o.require(passed == keys, std::to_string(passed) + "/" + std::to_string(keys) +
                                " differences within 1e-8 of numeric MZSV sums (max residual " + sci(worst) + ")");

  // nested partial sums at N = 1e5 as a second witness; their truncation error
  // reaches ~1e-8 once trailing 1s appear, so only the two reference keys are required
  OracleOptions nested;
  nested.method = MzvMethod::truncated;
  nested.precision_bits = 128;
  for (const auto& [m, n, s] : {std::tuple{2, 1, 1}, std::tuple{3, 2, 2}}) {
    const VerificationReport r = cross_validate(m, n, s, nested);
    o.require(r.pass, "nested-sum witness (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(s) +
                          ") residual " + sci(r.residual.to_double()));
  }
  for (const auto& [m, n, s] : {std::tuple{3, 1, 1}, std::tuple{4, 1, 1}}) {
    const VerificationReport r = cross_validate(m, n, s, nested);
    o.note("nested-sum residual (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(s) + ") " +
           sci(r.residual.to_double()));
  }
  expect_runtime(o, seconds_since(start), 600);
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t keys = 0, passed = 0;
  for (int k = 2; k <= 8; ++k) {
    for (int s = 1; 2 * s <= k; ++s) {
      const VerificationReport r = diagonal_validate(k, s);
      ++keys;
      if (r.pass && r.tolerance <= 1e-8) ++passed;
      else o.note("failed " + r.to_text(12));
    }
  }
  o.require(passed == keys, std::to_string(passed) + "/" + std::to_string(keys) + " diagonals within 1e-8");
  int exact = 0;
  for (int k = 2; k <= 8; ++k) {
    if (diagonal_poly(k, 1) == ZetaPoly::zeta(k)) ++exact;
  }
  o.require(exact == 7, std::to_string(exact) + "/7 height-one diagonals equal zeta(k)");
  return o;
}

Outcome criterion11() {
  Outcome o;
  SuiteConfig c = suite();
  c.max_weight = 12;
  const auto reports = run_identity("ohno-zagier", c);
  expect_reports(o, reports, "ohno-zagier", 5, 1e-4);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"a-forms", criterion1},          {"phi-agreement", criterion2},  {"generating-function", criterion3},
      {"lemma-chain", criterion4},      {"prop31", criterion5},         {"transformations", criterion6},
      {"height-one", criterion7},       {"extractor-structure", criterion8}, {"differences", criterion9},
      {"diagonals", criterion10},       {"ohno-zagier", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::ostringstream line;
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << " ["
         << seconds_since(start) << " s]";
    for (const auto& p : o.parts) line << " | " << p;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
