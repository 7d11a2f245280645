#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "mzstar/error.hpp"
#include "mzstar/hyper.hpp"
#include "mzstar/identity.hpp"
#include "mzstar/ko_extract.hpp"
#include "mzstar/mzv.hpp"

namespace mzstar::cli {
namespace {

struct RunConfig {
  long precision_bits = kDefaultPrecisionBits;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  int max_weight = 12;
  unsigned long mzv_trunc_n = 100000;
  std::string format = "json";
  Tiers tiers;
  bool even_zeta_as_z2 = false;
};

// Positional arguments and subcommand flags, fresh for every run.
struct Args {
  std::string composition;
  bool star = false;
  std::string method = "holder";
  bool plain = false;
  int k = 0;
  int m = 0;
  int n = 0;
  int s = 0;
  std::string name;
  std::vector<std::string> names;
  bool validate = false;
  int degree = kDefaultExpansionDegree;
  bool dump = false;
};

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  bool json() const { return config_.format == "json"; }
  bool latex() const { return config_.format == "latex"; }

  void line(const std::string& s) { out_ << s << '\n' << std::flush; }
  void object(const nlohmann::json& j) { line(j.dump()); }

  /// Streams a report; returns its verdict.
  bool report(const VerificationReport& r) {
    if (json()) {
      object(r.to_json());
    } else {
      line(r.to_text());
    }
    return r.pass;
  }

  ZetaPoly display(const ZetaPoly& p) const { return config_.even_zeta_as_z2 ? p.even_zetas_as_zeta2() : p; }

  std::string render(const ZetaPoly& p) const { return latex() ? display(p).to_latex() : display(p).to_text(); }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

SuiteConfig suite_config(const RunConfig& c) {
  SuiteConfig s;
  s.samples = c.samples;
  s.seed = c.seed;
  s.precision_bits = c.precision_bits;
  s.tiers = c.tiers;
  s.max_weight = c.max_weight;
  return s;
}

std::string key_label(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

int verdict(bool all_pass) { return all_pass ? kPass : kFail; }

void add_mzv(CLI::App& app, RunConfig& c, Args& a, Emitter& emit, std::function<int()>& action) {
  auto* mzv = app.add_subcommand("mzv", "Multiple zeta (star) values and composition sums");
  mzv->require_subcommand(1);

  auto* eval = mzv->add_subcommand("eval", "Evaluate zeta(k1,...,kn) or zeta*(k1,...,kn)");
  eval->add_option("composition", a.composition, "Index, e.g. 2,1,1")->required();
  eval->add_flag("--star", a.star, "Zeta-star value");
  eval->add_option("--method", a.method, "holder or truncated")
      ->check(CLI::IsMember({"holder", "truncated"}))
      ->capture_default_str();
  eval->callback([&] {
    action = [&]() -> int {
      const Composition comp = Composition::parse(a.composition);
      MzvOptions opts;
      opts.precision_bits = c.precision_bits;
      opts.method = a.method == "holder" ? MzvMethod::holder : MzvMethod::truncated;
      opts.trunc_N = c.mzv_trunc_n;
      const MzvResult r = a.star ? mzsv_numeric(comp, opts) : mzv_numeric(comp, opts);
      if (emit.json()) {
        nlohmann::json j = r.to_json();
        j["composition"] = comp.to_string();
        j["star"] = a.star;
        emit.object(j);
      } else {
        emit.line(std::string(a.star ? "zeta*" : "zeta") + comp.to_string() + " = " + r.value.to_string(40));
      }
      return kPass;
    };
  });

  auto* sum = mzv->add_subcommand("sum", "X0*(k,n,s) (or X0 with --plain): sum over weight, depth, height");
  sum->add_option("--k", a.k, "Weight")->required();
  sum->add_option("--n", a.n, "Depth")->required();
  sum->add_option("--s", a.s, "Height")->required();
  sum->add_flag("--plain", a.plain, "Sum zeta values instead of zeta-star values");
  sum->add_option("--method", a.method, "holder or truncated")
      ->check(CLI::IsMember({"holder", "truncated"}))
      ->capture_default_str();
  sum->callback([&] {
    action = [&]() -> int {
      const SumKey key{a.k, a.n, a.s};
      MzvOptions opts;
      opts.precision_bits = c.precision_bits;
      opts.method = a.method == "holder" ? MzvMethod::holder : MzvMethod::truncated;
      opts.trunc_N = c.mzv_trunc_n;
      const MzvResult r = a.plain ? x_sum(key, opts) : x_star_sum(key, opts);
      if (emit.json()) {
        nlohmann::json j = r.to_json();
        j["key"] = key.to_string();
        j["star"] = !a.plain;
        emit.object(j);
      } else {
        emit.line(std::string(a.plain ? "X0" : "X0*") + key.to_string() + " = " + r.value.to_string(40));
      }
      return kPass;
    };
  });

  auto* enumerate = mzv->add_subcommand("enumerate", "Admissible compositions with given weight, depth, height");
  enumerate->add_option("--k", a.k, "Weight")->required();
  enumerate->add_option("--n", a.n, "Depth")->required();
  enumerate->add_option("--s", a.s, "Height")->required();
  enumerate->callback([&] {
    action = [&]() -> int {
      const SumKey key{a.k, a.n, a.s};
      std::vector<std::string> parts;
      for (const auto& comp : enumerate_compositions(key)) parts.push_back(comp.to_string());
      if (emit.json()) {
        emit.object({{"key", key.to_string()}, {"compositions", parts}});
      } else {
        std::string joined;
        for (std::size_t i = 0; i < parts.size(); ++i) joined += (i ? ", " : "") + parts[i];
        emit.line("[" + joined + "]");
      }
      return kPass;
    };
  });
}

void add_hyper(CLI::App& app, RunConfig& c, Args& a, Emitter& emit, std::function<int()>& action) {
  auto* hyper = app.add_subcommand("hyper", "Unit-argument hypergeometric identities");
  hyper->require_subcommand(1);
  auto* check = hyper->add_subcommand("check", "Check gauss, trans2, trans1 or prop31 at seeded points");
  check->add_option("name", a.name, "Identity")->required()->check(CLI::IsMember(hyper_check_names()));
  check->callback([&] {
    action = [&]() -> int {
      bool ok = true;
      std::size_t passed = 0;
      const auto reports = run_hyper_check(a.name, c.samples, c.seed, c.precision_bits, c.tiers.tier1);
      for (const auto& r : reports) {
        const bool p = emit.report(r);
        ok = ok && p;
        passed += p;
      }
      if (emit.json()) {
        emit.object({{"summary", a.name}, {"passed", passed}, {"total", reports.size()}});
      } else {
        emit.line(a.name + ": " + std::to_string(passed) + "/" + std::to_string(reports.size()) + " passed");
      }
      return verdict(ok);
    };
  });
}

void add_verify(CLI::App& app, RunConfig& c, Args& a, Emitter& emit, std::function<int()>& action) {
  auto* verify = app.add_subcommand("verify", "Run identity checks at seeded sample points");
  std::vector<std::string> allowed = identity_names();
  allowed.push_back("all");
  verify->add_option("names", a.names, "Identities, or all")->required()->check(CLI::IsMember(allowed));
  verify->callback([&] {
    action = [&]() -> int {
      std::vector<std::string> todo;
      for (const auto& n : a.names) {
        if (n == "all") {
          todo = identity_names();
          break;
        }
        if (std::find(todo.begin(), todo.end(), n) == todo.end()) todo.push_back(n);
      }
      const SuiteConfig config = suite_config(c);
      bool ok = true;
      std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> counts;
      for (const auto& n : todo) {
        std::size_t passed = 0;
        const auto reports = run_identity(n, config);
        for (const auto& r : reports) {
          const bool p = emit.report(r);
          ok = ok && p;
          passed += p;
        }
        counts.push_back({n, {passed, reports.size()}});
      }
      for (const auto& [n, pt] : counts) {
        if (emit.json()) {
          emit.object({{"summary", n}, {"passed", pt.first}, {"total", pt.second}});
        } else {
          emit.line(n + ": " + std::to_string(pt.first) + "/" + std::to_string(pt.second) + " passed");
        }
      }
      return verdict(ok);
    };
  });
}

void add_ko(CLI::App& app, RunConfig& c, Args& a, Emitter& emit, std::function<int()>& action) {
  auto* ko = app.add_subcommand("ko", "Zeta polynomials extracted from the series expansion");
  ko->require_subcommand(1);

  auto* diff = ko->add_subcommand("diff", "(-1)^m X0*(m+n+1,n+1,s) - (-1)^n X0*(m+n+1,m+1,s)");
  diff->add_option("m", a.m)->required();
  diff->add_option("n", a.n)->required();
  diff->add_option("s", a.s)->required();
  diff->add_flag("--validate", a.validate, "Also compare against numeric X0* values");
  diff->callback([&] {
    action = [&]() -> int {
      const DifferencePoly d = difference_poly(a.m, a.n, a.s);
      if (emit.json()) {
        nlohmann::json j = d.to_json();
        j["latex"] = emit.display(d.poly).to_latex();
        j["display"] = emit.display(d.poly).to_text();
        emit.object(j);
      } else {
        emit.line(emit.render(d.poly));
      }
      if (!a.validate) return kPass;
      OracleOptions o;
      o.precision_bits = c.precision_bits;
      return verdict(emit.report(cross_validate(a.m, a.n, a.s, o)));
    };
  });

  auto* diag = ko->add_subcommand("diag", "X0*(k,s,s)");
  diag->add_option("k", a.k)->required();
  diag->add_option("s", a.s)->required();
  diag->add_flag("--validate", a.validate, "Also compare against a numeric X0* value");
  diag->callback([&] {
    action = [&]() -> int {
      const ZetaPoly p = diagonal_poly(a.k, a.s);
      if (emit.json()) {
        emit.object({{"k", a.k},
                     {"s", a.s},
                     {"poly", p.to_json()},
                     {"text", p.to_text()},
                     {"display", emit.display(p).to_text()},
                     {"latex", emit.display(p).to_latex()}});
      } else {
        emit.line(emit.render(p));
      }
      if (!a.validate) return kPass;
      OracleOptions o;
      o.precision_bits = c.precision_bits;
      return verdict(emit.report(diagonal_validate(a.k, a.s, o)));
    };
  });

  auto* table = ko->add_subcommand("table", "All differences and diagonals up to a weight, cross-validated");
  table->callback([&] {
    action = [&]() -> int {
      OracleOptions o;
      o.precision_bits = c.precision_bits;
      const auto rows = ko_table(c.max_weight, o);
      bool ok = true;
      if (emit.latex()) emit.line("\\begin{tabular}{lll}");
      for (const auto& row : rows) {
        ok = ok && row.check.pass;
        const std::string key = row.kind == "difference" ? key_label(row.m, row.n, row.s)
                                                         : "(" + std::to_string(row.m) + "," + std::to_string(row.s) + ")";
        if (emit.json()) {
          emit.object({{"kind", row.kind},
                       {"key", key},
                       {"poly", row.poly.to_json()},
                       {"text", emit.display(row.poly).to_text()},
                       {"residual", row.check.residual.to_string(6)},
                       {"tolerance", row.check.tolerance},
                       {"pass", row.check.pass}});
        } else if (emit.latex()) {
          emit.line(row.kind + " " + key + " & $" + emit.render(row.poly) + "$ & " + row.check.residual.to_string(3) +
                    " \\\\");
        } else {
          emit.line(row.kind + " " + key + " = " + emit.render(row.poly) + "  residual=" +
                    row.check.residual.to_string(3) + (row.check.pass ? " PASS" : " FAIL"));
        }
      }
      if (emit.latex()) emit.line("\\end{tabular}");
      return verdict(ok);
    };
  });

  auto* expand = ko->add_subcommand("expand", "Run the expansion pipeline and report its checks");
  expand->add_option("--max-degree", a.degree, "Total degree in u, v, t")
      ->check(CLI::Range(2, 30))
      ->capture_default_str();
  expand->add_flag("--dump", a.dump, "Print the serialized expansion");
  expand->callback([&] {
    action = [&]() -> int {
      const ExpansionResult e = expand_theorem_rhs(a.degree);
      const StructuralSummary st = structural_checks(e);
      if (a.dump) {
        emit.object(e.to_json());
      } else if (emit.json()) {
        nlohmann::json log = nlohmann::json::array();
        for (const auto& step : e.divisibility_log) log.push_back(step.to_json());
        emit.object({{"max_total_degree", e.max_total_degree},
                     {"terms", e.series.size()},
                     {"gamma_free", st.gamma_free},
                     {"weight_graded", st.weight_graded},
                     {"divisions_exact", st.divisions_exact},
                     {"antisymmetric", st.antisymmetric},
                     {"divisibility_log", log}});
      } else {
        for (const auto& step : e.divisibility_log) {
          emit.line(step.step + " " + step.check + ": " + step.detail + (step.ok ? " ok" : " FAILED"));
        }
        emit.line("terms=" + std::to_string(e.series.size()) + " gamma_free=" + (st.gamma_free ? "yes" : "no") +
                  " weight_graded=" + (st.weight_graded ? "yes" : "no") +
                  " antisymmetric=" + (st.antisymmetric ? "yes" : "no"));
      }
      return verdict(st.pass());
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Args args_;
  Emitter emit(config, out);
  std::function<int()> action;

  CLI::App app{"Multiple zeta-star values: identity checks and zeta-polynomial extraction", "mzstar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision-bits", config.precision_bits, "Working precision in bits")
      ->check(CLI::Range(64L, 1L << 16))
      ->envname("MZSTAR_PRECISION_BITS")
      ->capture_default_str();
  app.add_option("--samples", config.samples, "Sample points per identity")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24))
      ->envname("MZSTAR_SAMPLES")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Sampling seed")->envname("MZSTAR_SEED")->capture_default_str();
  app.add_option("--max-weight", config.max_weight, "Truncation weight / table weight")
      ->check(CLI::Range(4, 30))
      ->envname("MZSTAR_MAX_WEIGHT")
      ->capture_default_str();
  app.add_option("--mzv-trunc-n", config.mzv_trunc_n, "Truncation point of nested MZV sums")
      ->check(CLI::Range(10UL, 100000000UL))
      ->envname("MZSTAR_MZV_TRUNC_N")
      ->capture_default_str();
  app.add_option("--format", config.format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}))
      ->envname("MZSTAR_FORMAT")
      ->capture_default_str();
  app.add_option("--tier1", config.tiers.tier1, "Formula-vs-formula tolerance")->envname("MZSTAR_TIER1");
  app.add_option("--tier-w12", config.tiers.truncation_w12, "Definition-vs-formula tolerance at weight 12")
      ->envname("MZSTAR_TIER_W12");
  app.add_option("--tier-w14", config.tiers.truncation_w14, "Definition-vs-formula tolerance at weight 14")
      ->envname("MZSTAR_TIER_W14");
  app.add_flag("--even-zeta-as-z2", config.even_zeta_as_z2, "Display zeta(2k) as rational multiples of zeta(2)^k")
      ->envname("MZSTAR_EVEN_ZETA_AS_Z2");

  add_mzv(app, config, args_, emit, action);
  add_hyper(app, config, args_, emit, action);
  add_verify(app, config, args_, emit, action);
  add_ko(app, config, args_, emit, action);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  if (!action) {
    err << "mzstar: no command\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const DomainError& e) {
    err << "mzstar: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "mzstar: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace mzstar::cli
