// Command-line driver: one-shot normalize/expand/omega on expressions, the
// differential consistency sweep, lemma verification and the rule table.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "uqglmn/uqglmn.hpp"

namespace {

using namespace uqglmn;

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitError = 4;

void write_json(std::string const& path, nlohmann::ordered_json const& doc) {
  if (path.empty()) {
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out << doc.dump(2) << '\n';
}

struct ExprArgs {
  int m = 0;
  int n = 0;
  std::string expr;
};

void add_expr_args(CLI::App* cmd, ExprArgs& args) {
  cmd->add_option("--m", args.m, "number of even indices")->required();
  cmd->add_option("--n", args.n, "number of odd indices")->required();
  cmd->add_option("expr", args.expr, "expression, e.g. \"E[1,2]*E[2,1]\"")->required();
}

int cmd_normalize(ExprArgs const& args, std::size_t budget) {
  Signature const sig(args.m, args.n);
  Element const x = parse_element(args.expr, sig);
  std::cout << print_element(normal_order(x, NormalOrderConfig{budget})) << '\n';
  return 0;
}

int cmd_expand(ExprArgs const& args, std::string const& pivot) {
  Signature const sig(args.m, args.n);
  Element const x = parse_element(args.expr, sig);
  if (pivot != "all") {
    PivotRule const rule = pivot == "col" ? PivotRule::col : PivotRule::row;
    std::cout << print_element(expand_ns(x, {rule, std::nullopt})) << '\n';
    return 0;
  }
  std::vector<std::pair<std::string, PivotStrategy>> strategies{
      {"row", {PivotRule::row, std::nullopt}}, {"col", {PivotRule::col, std::nullopt}}};
  for (int c = 1; c <= sig.size(); ++c) {
    strategies.push_back({"top=" + std::to_string(c), {PivotRule::row, c}});
  }
  Normalizer nz(sig);
  std::optional<Element> reference;
  std::vector<Element> seen;
  bool invariant = true;
  for (auto const& [name, strategy] : strategies) {
    Element const e = expand_ns(x, strategy);
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
      continue;
    }
    seen.push_back(e);
    std::cout << "pivot " << name << ": " << print_element(e) << '\n';
    Element const normal = nz.normal_order(e);
    if (!reference) {
      reference = normal;
    } else if (!(normal == *reference)) {
      invariant = false;
    }
  }
  std::cout << "normal form: " << print_element(*reference) << '\n';
  std::cout << "pivot-invariant: " << (invariant ? "yes" : "no") << '\n';
  return invariant ? 0 : kExitFailures;
}

int cmd_omega(ExprArgs const& args) {
  Signature const sig(args.m, args.n);
  std::cout << print_element(omega(parse_element(args.expr, sig))) << '\n';
  return 0;
}

int cmd_sweep(SweepConfig const& cfg, std::string const& json_path) {
  SweepReport const report = run_sweep(cfg);
  for (auto const& [sig, ms] : report.signature_ms) {
    std::size_t pass = 0, fail = 0;
    for (auto const& e : report.entries) {
      if (e.signature == sig) {
        (e.status == CheckStatus::pass ? pass : fail) += 1;
      }
    }
    std::cout << sig.to_string() << ": pass " << pass << " fail " << fail << " (" << ms
              << " ms)\n";
  }
  for (auto const& e : report.entries) {
    if (e.status != CheckStatus::pass) {
      std::cout << "FAIL " << e.signature.to_string() << " " << print_letter(e.x) << "*"
                << print_letter(e.y) << " [" << to_string(e.status) << "]\n"
                << "  NormalOrder(XY)           = " << e.lhs << '\n'
                << "  NormalOrder(ExpandNS(XY)) = " << e.rhs << '\n';
      if (!e.detail.empty()) {
        std::cout << "  " << e.detail << '\n';
      }
    }
  }
  std::cout << "total: pass " << report.summary.pass << " fail " << report.summary.fail << " ("
            << report.total_ms << " ms)\n";
  write_json(json_path, to_json(report));
  if (report.summary.budget_exceeded > 0) {
    return kExitBudget;
  }
  return report.summary.fail == 0 ? 0 : kExitFailures;
}

int cmd_verify_lemma(int max_total, int jobs, std::string const& json_path) {
  LemmaReport const report = run_verify_lemma(max_total, jobs);
  for (auto const& [name, counts] : report.tallies) {
    std::cout << name << ": pass " << counts.pass << " fail " << counts.fail << '\n';
  }
  for (auto const& e : report.entries) {
    if (e.status != CheckStatus::pass) {
      std::cout << "FAIL " << e.signature.to_string() << " " << e.case_name << " (";
      for (std::size_t i = 0; i < e.tuple.size(); ++i) {
        std::cout << (i ? "," : "") << e.tuple[i];
      }
      std::cout << ") [" << to_string(e.status) << "]\n  lhs: " << e.lhs
                << "\n  rhs: " << e.rhs << '\n';
    }
  }
  std::cout << "total: pass " << report.summary.pass << " fail " << report.summary.fail << " ("
            << report.total_ms << " ms)\n";
  write_json(json_path, to_json(report));
  return report.summary.fail == 0 ? 0 : kExitFailures;
}

int cmd_dump_rules(std::string const& json_path) {
  auto const doc = rule_table_json();
  if (json_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_json(json_path, doc);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal ordering and lemma verification for U_q[gl(m|n)]"};
  app.require_subcommand(1);

  ExprArgs expr_args;
  std::size_t budget = NormalOrderConfig{}.max_rewrite_steps;
  std::string pivot = "row";
  std::string json_path;
  SweepConfig sweep_cfg;
  std::string sweep_pivot = "row";
  int lemma_total = 5;
  int lemma_jobs = 1;

  auto* normalize = app.add_subcommand("normalize", "print the normal-ordered form");
  add_expr_args(normalize, expr_args);
  normalize->add_option("--budget", budget, "rewrite step budget");

  auto* expand = app.add_subcommand("expand", "expand nonsimple generators");
  add_expr_args(expand, expr_args);
  expand->add_option("--pivot", pivot, "pivot strategy")
      ->check(CLI::IsMember({"row", "col", "all"}));

  auto* omega_cmd = app.add_subcommand("omega", "apply the antiautomorphism omega");
  add_expr_args(omega_cmd, expr_args);

  auto* sweep = app.add_subcommand("sweep", "NormalOrder(XY) vs NormalOrder(ExpandNS(XY))");
  sweep->add_option("--max-total", sweep_cfg.max_total, "largest m+n")->required();
  sweep->add_option("--max-height", sweep_cfg.max_height, "largest generator height")
      ->required();
  sweep->add_option("--jobs", sweep_cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--budget", sweep_cfg.budget, "rewrite step budget per normalization");
  sweep->add_option("--pivot", sweep_pivot, "pivot strategy")
      ->check(CLI::IsMember({"row", "col"}));
  sweep->add_option("--json", json_path, "write the JSON report here");

  auto* lemma = app.add_subcommand("verify-lemma", "check every rule case by expansion");
  lemma->add_option("--max-total", lemma_total, "largest m+n")->required();
  lemma->add_option("--jobs", lemma_jobs, "worker threads")->check(CLI::PositiveNumber);
  lemma->add_option("--json", json_path, "write the JSON report here");

  auto* dump = app.add_subcommand("dump-rules", "print the rule table as JSON");
  dump->add_option("--json", json_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*normalize) return cmd_normalize(expr_args, budget);
    if (*expand) return cmd_expand(expr_args, pivot);
    if (*omega_cmd) return cmd_omega(expr_args);
    if (*sweep) {
      if (sweep_cfg.max_total < 2 || sweep_cfg.max_height < 1) {
        std::cerr << "error: sweep requires --max-total >= 2 and --max-height >= 1\n";
        return kExitUsage;
      }
      sweep_cfg.pivot = sweep_pivot == "col" ? PivotRule::col : PivotRule::row;
      return cmd_sweep(sweep_cfg, json_path);
    }
    if (*lemma) {
      if (lemma_total < 2) {
        std::cerr << "error: verify-lemma requires --max-total >= 2\n";
        return kExitUsage;
      }
      return cmd_verify_lemma(lemma_total, lemma_jobs, json_path);
    }
    if (*dump) return cmd_dump_rules(json_path);
  } catch (BudgetExceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (InvalidSignature const& e) {
    std::cerr << "invalid signature: " << e.what() << '\n';
    return kExitUsage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
