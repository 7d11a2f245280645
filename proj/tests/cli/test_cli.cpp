#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace mzstar::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  }
  return lines;
}

TEST(Cli, EnumerateWeightThreeDepthTwo) {
  const Outcome r = invoke({"mzv", "enumerate", "--k", "3", "--n", "2", "--s", "1", "--format", "text"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "[(2,1)]\n");
}

TEST(Cli, EvalJsonFields) {
  const Outcome r = invoke({"mzv", "eval", "2,1", "--star"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  for (const char* field : {"composition", "value", "error_estimate", "N", "precision_bits"}) {
    EXPECT_TRUE(lines[0].contains(field)) << field;
  }
  // ζ⋆(2,1) = 2ζ(3)
  EXPECT_EQ(lines[0]["value"].get<std::string>().substr(0, 12), "2.4041138063");
}

TEST(Cli, KoDiffLatex) {
  const Outcome r = invoke({"ko", "diff", "2", "1", "1", "--format", "latex"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "\\frac{17}{4}\\zeta(4)\n");
}

TEST(Cli, KoDiffValidateJson) {
  const Outcome r = invoke({"ko", "diff", "3", "2", "1", "--validate"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["weight"], 6);
  EXPECT_EQ(lines[1]["identity"], "ko-difference");
  EXPECT_TRUE(lines[1]["pass"].get<bool>());
}

TEST(Cli, KoDiagEvenZetaDisplay) {
  const Outcome plain = invoke({"ko", "diag", "4", "1", "--format", "text"});
  EXPECT_EQ(plain.out, "z(4)\n");
  const Outcome folded = invoke({"--even-zeta-as-z2", "ko", "diag", "4", "1", "--format", "text"});
  EXPECT_EQ(folded.code, kPass);
  EXPECT_NE(folded.out, plain.out);
  EXPECT_NE(folded.out.find("z(2)^2"), std::string::npos) << folded.out;
}

TEST(Cli, KoTableSmall) {
  const Outcome r = invoke({"ko", "table", "--max-weight", "5"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(json_lines(r.out).size(), 13u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"hyper", "check", "nope"}).code, kUsage);
  EXPECT_EQ(invoke({"--precision-bits", "32", "mzv", "eval", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"--samples", "0", "verify", "lemma21"}).code, kUsage);
  EXPECT_EQ(invoke({"--max-weight", "3", "ko", "table"}).code, kUsage);
  EXPECT_EQ(invoke({"mzv", "eval", "1,2"}).code, kUsage);
  EXPECT_EQ(invoke({"ko", "diff", "1", "2", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kPass);
}

TEST(Cli, FailingVerdictExitsOne) {
  // a tier-1 tolerance of zero cannot be met by floating evaluation
  const Outcome r = invoke({"--samples", "3", "--tier1", "0", "hyper", "check", "trans2"});
  EXPECT_EQ(r.code, kFail);
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.back()["summary"], "trans2");
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"--samples", "4", "--seed", "7", "verify", "lemma21", "lemma42"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  ASSERT_EQ(a.code, kPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Outcome other = invoke({"--samples", "4", "--seed", "8", "verify", "lemma21", "lemma42"});
  EXPECT_NE(a.out, other.out);
}

TEST(Cli, VerifyStreamsSortedReportsAndSummaries) {
  const Outcome r = invoke({"--samples", "5", "--seed", "3", "verify", "lemma44"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto lines = json_lines(r.out);
  std::size_t reports = 0;
  for (const auto& j : lines) {
    if (j.contains("identity")) {
      EXPECT_EQ(j["identity"], "lemma44");
      ++reports;
    }
  }
  EXPECT_EQ(reports, 5u);
  EXPECT_EQ(lines.back()["passed"], 5);
}

TEST(Cli, EnvironmentSuppliesDefaults) {
  ::setenv("MZSTAR_FORMAT", "text", 1);
  ::setenv("MZSTAR_SAMPLES", "2", 1);
  const Outcome r = invoke({"hyper", "check", "gauss"});
  ::unsetenv("MZSTAR_FORMAT");
  ::unsetenv("MZSTAR_SAMPLES");
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.out.find("gauss: 2/2 passed"), std::string::npos) << r.out;
  // an explicit flag wins over the environment
  ::setenv("MZSTAR_FORMAT", "text", 1);
  const Outcome j = invoke({"--format", "json", "--samples", "1", "hyper", "check", "gauss"});
  ::unsetenv("MZSTAR_FORMAT");
  EXPECT_EQ(json_lines(j.out).size(), 2u);
}

TEST(Cli, ExpandSummary) {
  const Outcome r = invoke({"ko", "expand", "--max-degree", "4"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = json_lines(r.out).front();
  EXPECT_EQ(j["max_total_degree"], 4);
  EXPECT_TRUE(j["gamma_free"].get<bool>());
  const Outcome dump = invoke({"ko", "expand", "--max-degree", "3", "--dump"});
  ASSERT_EQ(dump.code, kPass);
  EXPECT_TRUE(json_lines(dump.out).front().contains("series"));
}

}  // namespace
}  // namespace mzstar::cli
