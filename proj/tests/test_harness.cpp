#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqglmn;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI with arguments, capturing stdout and the exit status.
CliRun cli(std::string const& args) {
  std::string const cmd = std::string(UQGLMN_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int const status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST(Sweep, SmallestSignaturePasses) {
  SweepReport const r = run_sweep({2, 1});
  EXPECT_EQ(r.entries.size(), 4u);
  EXPECT_EQ(r.summary.pass, 4u);
  EXPECT_EQ(r.summary.fail, 0u);
}

TEST(Sweep, RejectsBadBounds) {
  EXPECT_THROW(run_sweep({1, 1}), Error);
  EXPECT_THROW(run_sweep({3, 0}), Error);
}

TEST(Sweep, ReportIsDeterministicAcrossJobCounts) {
  SweepConfig cfg{4, 3};
  cfg.jobs = 1;
  auto const a = without_timing(to_json(run_sweep(cfg))).dump();
  cfg.jobs = 4;
  auto const b = without_timing(to_json(run_sweep(cfg))).dump();
  EXPECT_EQ(a, b);
  auto const doc = nlohmann::ordered_json::parse(a);
  EXPECT_EQ(doc["summary"]["fail"], 0);
  EXPECT_TRUE(doc["cases"][0].contains("lhs"));
  EXPECT_TRUE(doc["cases"][0].contains("pair"));
}

TEST(VerifyLemma, ExamplesPass) {
  LemmaReport const r = run_verify_lemma(3);
  EXPECT_EQ(r.summary.fail, 0u);
  EXPECT_GT(r.tallies.at("E17").pass, 0u);
  EXPECT_GT(r.tallies.at("Kappa").pass, 0u);
  auto const a = without_timing(to_json(r)).dump();
  auto const b = without_timing(to_json(run_verify_lemma(3, 3))).dump();
  EXPECT_EQ(a, b);
}

TEST(Cli, Normalize) {
  CliRun r = cli("normalize --m 2 --n 1 \"E[3,1]*E[3,1]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  Signature const sig(1, 1);
  std::string const expected =
      print_element(normal_order(parse_element("E[1,2]*E[2,1]", sig))) + "\n";
  r = cli("normalize --m 1 --n 1 \"E[1,2]*E[2,1]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, expected);
  EXPECT_EQ(r.out.rfind("-E[2,1]*E[1,2] + ", 0), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("normalize --m 2 --n 0 \"E[1,2]\"").code, 2);
  EXPECT_EQ(cli("normalize --m 1 --n 1 \"E[1,1]\"").code, 2);
  EXPECT_EQ(cli("normalize --m 1 --n 1 \"E[1,2\"").code, 2);
  EXPECT_EQ(cli("bogus").code, 2);
  EXPECT_EQ(cli("normalize --m 2 --n 2 --budget 2 \"E[1,4]*E[4,1]*E[1,4]*E[4,2]\"").code, 3);
  EXPECT_EQ(cli("sweep --max-total 1 --max-height 1").code, 2);
  EXPECT_EQ(cli("sweep --max-total 3 --max-height 2").code, 0);
  EXPECT_EQ(cli("normalize --m 1 --n 1 \"E[1,2]*K[1]^(1/2)\"").code, 4);
}

TEST(Cli, ExpandAndOmega) {
  CliRun r = cli("expand --m 2 --n 1 \"E[3,1]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-q*E[2,1]*E[3,2] + E[3,2]*E[2,1]\n");
  r = cli("expand --m 2 --n 2 --pivot all \"E[4,1]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pivot-invariant: yes"), std::string::npos);
  r = cli("omega --m 1 --n 1 \"q*K[1]*E[1,2]\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q^-1*E[2,1]*K[1]^-1\n");
}

TEST(Cli, JsonReportsAreByteIdenticalOutsideTiming) {
  std::string const base = ::testing::TempDir() + "uqglmn_sweep_";
  ASSERT_EQ(cli("sweep --max-total 3 --max-height 2 --jobs 2 --json " + base + "a.json").code, 0);
  ASSERT_EQ(cli("sweep --max-total 3 --max-height 2 --json " + base + "b.json").code, 0);
  auto load = [](std::string const& p) {
    std::ifstream in(p);
    return without_timing(nlohmann::ordered_json::parse(in)).dump();
  };
  EXPECT_EQ(load(base + "a.json"), load(base + "b.json"));
}

TEST(Cli, DumpRules) {
  CliRun r = cli("dump-rules");
  EXPECT_EQ(r.code, 0);
  auto const doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["rules"].size(), rule_table().size());
}
