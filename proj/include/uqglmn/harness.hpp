#ifndef UQGLMN_HARNESS_HPP
#define UQGLMN_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "uqglmn/element.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/expansion.hpp"
#include "uqglmn/expr_io.hpp"
#include "uqglmn/normalizer.hpp"
#include "uqglmn/rule_verification.hpp"
#include "uqglmn/rulebook.hpp"

namespace uqglmn {

enum class CheckStatus { pass, mismatch, conservation, not_idempotent, budget_exceeded, error };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::mismatch: return "mismatch";
    case CheckStatus::conservation: return "conservation_violation";
    case CheckStatus::not_idempotent: return "not_idempotent";
    case CheckStatus::budget_exceeded: return "budget_exceeded";
    case CheckStatus::error: return "error";
  }
  return "?";
}

struct SweepConfig {
  int max_total = 5;
  int max_height = 4;
  int jobs = 1;
  PivotRule pivot = PivotRule::row;
  std::size_t budget = NormalOrderConfig{}.max_rewrite_steps;
};

struct SweepEntry {
  Signature signature;
  Letter x;
  Letter y;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct SummaryCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t mismatches = 0;
  std::size_t conservation_violations = 0;
  std::size_t idempotence_failures = 0;
  std::size_t budget_exceeded = 0;
  std::size_t errors = 0;

  void add(CheckStatus s) {
    if (s == CheckStatus::pass) {
      ++pass;
      return;
    }
    ++fail;
    switch (s) {
      case CheckStatus::mismatch: ++mismatches; break;
      case CheckStatus::conservation: ++conservation_violations; break;
      case CheckStatus::not_idempotent: ++idempotence_failures; break;
      case CheckStatus::budget_exceeded: ++budget_exceeded; break;
      default: ++errors; break;
    }
  }
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepEntry> entries;
  SummaryCounts summary;
  std::vector<std::pair<Signature, double>> signature_ms;
  double total_ms = 0;
};

/// Signatures with m, n >= 1 and min_total <= m + n <= max_total.
inline std::vector<Signature> signatures_up_to(int max_total, int min_total = 2) {
  std::vector<Signature> out;
  for (int total = std::max(2, min_total); total <= max_total; ++total) {
    for (int m = 1; m < total; ++m) {
      out.emplace_back(m, total - m);
    }
  }
  return out;
}

/// Non-Cartan generators of height at most max_height, ordered by (row, col).
inline std::vector<Letter> generators_up_to(Signature const& sig, int max_height) {
  std::vector<Letter> out;
  for (int a = 1; a <= sig.size(); ++a) {
    for (int b = 1; b <= sig.size(); ++b) {
      if (a != b && std::abs(a - b) <= max_height) {
        out.push_back(Letter::gen(a, b));
      }
    }
  }
  return out;
}

/// Whether every monomial of `x` carries the given gl-weight and grading.
inline bool conserves(Element const& x, std::vector<int> const& weight, int grade) {
  for (auto const& [w, c] : x.terms()) {
    if (weight_of(w, x.signature()) != weight || grade_of(w, x.signature()) != grade) {
      return false;
    }
  }
  return true;
}

namespace harness_detail {

  inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
  }

  // Runs fn(i, worker_state) for i in [0, count) over `jobs` threads, each
  // with its own state from make_state().
  template <typename MakeState, typename Fn>
  void parallel_for(std::size_t count, int jobs, MakeState make_state, Fn fn) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      auto state = make_state();
      for (std::size_t i = next++; i < count; i = next++) {
        fn(i, state);
      }
    };
    int const threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (threads == 1) {
      worker();
      return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }

}  // namespace harness_detail

/// Checks NormalOrder(XY) == NormalOrder(ExpandNS(XY)) for one ordered
/// pair, together with weight/grading conservation and idempotence.
inline SweepEntry check_pair(Normalizer& nz, Letter x, Letter y, PivotStrategy pivot = {}) {
  Signature const& sig = nz.signature();
  SweepEntry entry{sig, x, y, CheckStatus::pass, {}, {}, {}};
  Element const product = Element::monomial(sig, 1, {x, y});
  auto const weight = weight_of({x, y}, sig);
  int const grade = grade_of(Word{x, y}, sig);
  try {
    Element const expanded = expand_ns(product, pivot);
    Element const lhs = nz.normal_order(product);
    Element const rhs = nz.normal_order(expanded);
    entry.lhs = print_element(lhs);
    entry.rhs = print_element(rhs);
    if (!conserves(expanded, weight, grade) || !conserves(lhs, weight, grade) ||
        !conserves(rhs, weight, grade)) {
      entry.status = CheckStatus::conservation;
    } else if (!(lhs == rhs)) {
      entry.status = CheckStatus::mismatch;
    } else if (!is_normal(lhs) || !(nz.normal_order(lhs) == lhs)) {
      entry.status = CheckStatus::not_idempotent;
    }
  } catch (BudgetExceeded const& e) {
    entry.status = CheckStatus::budget_exceeded;
    entry.detail = e.what();
  } catch (Error const& e) {
    entry.status = CheckStatus::error;
    entry.detail = e.what();
  }
  return entry;
}

/// The differential consistency sweep over all signatures and ordered
/// generator pairs within the configured bounds.
inline SweepReport run_sweep(SweepConfig const& cfg) {
  if (cfg.max_total < 2 || cfg.max_height < 1) {
    throw Error("sweep bounds must satisfy max_total >= 2 and max_height >= 1");
  }
  SweepReport report{cfg, {}, {}, {}, 0};
  auto const start = std::chrono::steady_clock::now();
  for (Signature const& sig : signatures_up_to(cfg.max_total)) {
    auto const sig_start = std::chrono::steady_clock::now();
    auto const gens = generators_up_to(sig, std::min(cfg.max_height, sig.size() - 1));
    SweepEntry const blank{sig, {}, {}, CheckStatus::pass, {}, {}, {}};
    std::vector<SweepEntry> entries(gens.size() * gens.size(), blank);
    harness_detail::parallel_for(
        entries.size(), cfg.jobs,
        [&] { return Normalizer(sig, NormalOrderConfig{cfg.budget}); },
        [&](std::size_t i, Normalizer& nz) {
          entries[i] = check_pair(nz, gens[i / gens.size()], gens[i % gens.size()],
                                  PivotStrategy{cfg.pivot, std::nullopt});
        });
    for (auto& e : entries) {
      report.summary.add(e.status);
      report.entries.push_back(std::move(e));
    }
    report.signature_ms.emplace_back(sig, harness_detail::elapsed_ms(sig_start));
  }
  report.total_ms = harness_detail::elapsed_ms(start);
  return report;
}

struct LemmaEntry {
  Signature signature;
  std::string case_name;
  IndexTuple tuple;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
};

struct LemmaReport {
  int max_total = 5;
  std::vector<LemmaEntry> entries;
  std::map<std::string, SummaryCounts> tallies;
  SummaryCounts summary;
  double total_ms = 0;
};

/// Every verification case and omega-coherence pair, for every admissible
/// tuple at each signature with m + n <= max_total.
inline LemmaReport run_verify_lemma(int max_total, int jobs = 1) {
  if (max_total < 2) {
    throw Error("verify-lemma requires max_total >= 2");
  }
  LemmaReport report;
  report.max_total = max_total;
  auto const start = std::chrono::steady_clock::now();
  for (Signature const& sig : signatures_up_to(max_total)) {
    struct Task {
      CaseId id;
      std::optional<CaseId> partner;
      IndexTuple tuple;
    };
    std::vector<Task> tasks;
    for (CaseId id : verification_cases()) {
      for (auto& t : admissible_tuples(id, sig)) {
        tasks.push_back({id, std::nullopt, std::move(t)});
      }
    }
    for (auto const& [from, to] : omega_partners()) {
      for (auto& t : admissible_tuples(from, sig)) {
        tasks.push_back({from, to, std::move(t)});
      }
    }
    std::vector<LemmaEntry> entries(tasks.size(), LemmaEntry{sig, {}, {}, CheckStatus::pass, {}, {}});
    harness_detail::parallel_for(
        tasks.size(), jobs, [&] { return Normalizer(sig); },
        [&](std::size_t i, Normalizer& nz) {
          Task const& task = tasks[i];
          LemmaEntry& e = entries[i];
          e.tuple = task.tuple;
          try {
            if (task.partner) {
              e.case_name = "omega:" + std::string(to_string(task.id)) + "->" +
                            std::string(to_string(*task.partner));
              auto [l, r] = omega_image(task.id, *task.partner, task.tuple, sig, nz);
              e.lhs = print_element(l);
              e.rhs = print_element(r);
              e.status = l == r ? CheckStatus::pass : CheckStatus::mismatch;
              return;
            }
            e.case_name = std::string(to_string(task.id));
            for (auto const& ident : identities(task.id, task.tuple, sig)) {
              IdentityCheck const chk = check_identity(ident, nz);
              e.lhs += (e.lhs.empty() ? "" : " ; ") + print_element(chk.lhs);
              e.rhs += (e.rhs.empty() ? "" : " ; ") + print_element(chk.rhs);
              if (!chk.holds) {
                e.status = CheckStatus::mismatch;
              } else if (!(nz.normal_order(chk.lhs) == chk.lhs)) {
                e.status = CheckStatus::not_idempotent;
              }
            }
          } catch (BudgetExceeded const&) {
            e.status = CheckStatus::budget_exceeded;
          } catch (Error const& ex) {
            e.status = CheckStatus::error;
            e.lhs = ex.what();
          }
        });
    for (auto& e : entries) {
      report.summary.add(e.status);
      report.tallies[e.case_name].add(e.status);
      report.entries.push_back(std::move(e));
    }
  }
  report.total_ms = harness_detail::elapsed_ms(start);
  return report;
}

// ---- JSON ----

inline nlohmann::ordered_json to_json(Signature const& sig) {
  return {{"m", sig.m()}, {"n", sig.n()}};
}

inline nlohmann::ordered_json to_json(SummaryCounts const& s) {
  return {{"pass", s.pass},
          {"fail", s.fail},
          {"mismatches", s.mismatches},
          {"conservation_violations", s.conservation_violations},
          {"idempotence_failures", s.idempotence_failures},
          {"budget_exceeded", s.budget_exceeded},
          {"errors", s.errors}};
}

/// Report as JSON. Everything except "timing_ms" is a deterministic function
/// of the configuration.
inline nlohmann::ordered_json to_json(SweepReport const& r) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (auto const& e : r.entries) {
    nlohmann::ordered_json c{{"signature", to_json(e.signature)},
                             {"pair", {print_letter(e.x), print_letter(e.y)}},
                             {"status", to_string(e.status)},
                             {"lhs", e.lhs},
                             {"rhs", e.rhs}};
    if (!e.detail.empty()) {
      c["detail"] = e.detail;
    }
    cases.push_back(std::move(c));
  }
  nlohmann::ordered_json per_sig = nlohmann::ordered_json::array();
  for (auto const& [sig, ms] : r.signature_ms) {
    per_sig.push_back({{"signature", to_json(sig)}, {"ms", ms}});
  }
  return {{"config",
           {{"command", "sweep"},
            {"max_total", r.config.max_total},
            {"max_height", r.config.max_height},
            {"pivot", r.config.pivot == PivotRule::row ? "row" : "col"},
            {"budget", r.config.budget}}},
          {"cases", std::move(cases)},
          {"summary", to_json(r.summary)},
          {"timing_ms", {{"total", r.total_ms}, {"per_signature", std::move(per_sig)}}}};
}

inline nlohmann::ordered_json to_json(LemmaReport const& r) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (auto const& e : r.entries) {
    cases.push_back({{"signature", to_json(e.signature)},
                     {"case", e.case_name},
                     {"tuple", e.tuple},
                     {"status", to_string(e.status)},
                     {"lhs", e.lhs},
                     {"rhs", e.rhs}});
  }
  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (auto const& [name, counts] : r.tallies) {
    tallies[name] = {{"pass", counts.pass}, {"fail", counts.fail}};
  }
  return {{"config", {{"command", "verify-lemma"}, {"max_total", r.max_total}}},
          {"cases", std::move(cases)},
          {"tallies", std::move(tallies)},
          {"summary", to_json(r.summary)},
          {"timing_ms", {{"total", r.total_ms}}}};
}

inline nlohmann::ordered_json rule_table_json() {
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  for (auto const& info : rule_table()) {
    rules.push_back({{"caseId", to_string(info.id)},
                     {"guard", info.guard},
                     {"replacement", info.replacement}});
  }
  return {{"order_convention",
           "lowering E[a,b] (a>b) sorted by (b,a), then Cartan block by index, then "
           "raising E[a,b] (a<b) sorted by (a,b)"},
          {"notation",
           "s = (-1)^([x][y]); q_a = q^((-1)^[a]); Delta_a = q_a - q_a^-1; Dbar_a = 1/Delta_a"},
          {"rules", std::move(rules)}};
}

}  // namespace uqglmn

#endif  // UQGLMN_HARNESS_HPP
