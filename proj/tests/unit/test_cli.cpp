#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "minorforge/graph6.hpp"

namespace mf = minorforge;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = mf::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("minorforge_cli_" + name);
  std::ofstream(p) << contents;
  return p;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"invariants", "--nope"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"invariants"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"invariants", "--gnp", "5,0.5"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"invariants", "--gnp", "5,1.5,1"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"invariants", "--gnp", "5,0.5,1", "--format", "xml"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"invariants", "--gnp", "5,0.5,1", "--budget-alpha", "0"}).code,
            mf::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--gnp", "5,0.5,1", "--graph6", "x.g6"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"bounds-table", "--alpha", "3"}).code, mf::cli::kExitUsage);
  EXPECT_EQ(run({"bounds-table", "--alpha", "5..3", "--h", "5"}).code, mf::cli::kExitUsage);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("bounds-table"), std::string::npos);
}

TEST(Cli, UnreadableInput) {
  const auto r = run({"verify", "--graph6", "/nonexistent/dir/corpus.g6"});
  EXPECT_EQ(r.code, mf::cli::kExitNoInput);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST(Cli, BoundsTableRow) {
  const auto r = run({"bounds-table", "--alpha", "3", "--h", "5..8", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(rows[0],
            "alpha,h,omega,conj_alpha_h,duchet_meyniel,kpt_eq1,kpt_omega,kpt_32,ks_eq2,wood_eq3,"
            "fox,balogh_kostochka,theorem1,best,best_value");
  EXPECT_EQ(rows[1], "3,5,1,15,25,21,24,45/2,20,15,5949/200,1461/50,15,theorem1,15");

  const auto j = json::parse(run({"bounds-table", "--alpha", "3", "--h", "5..8"}).out);
  ASSERT_EQ(j.size(), 4U);
  EXPECT_EQ(j[0]["bounds"]["theorem1"], "15");
  EXPECT_EQ(j[0]["bounds"]["wood_eq3"], "15");
  EXPECT_EQ(j[0]["bounds"]["ks_eq2"], "20");
  EXPECT_EQ(j[1]["best"]["value"], "19");
}

TEST(Cli, VerifyCleanCorpus) {
  const auto corpus = temp_file("clean.g6", "Bw\nIheA@GUAo\nDhc\n");
  const auto violations = fs::temp_directory_path() / "minorforge_cli_violations.txt";
  const auto r = run({"verify", "--graph6", corpus.string(), "--format", "csv", "--violations-out",
                      violations.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[1].rfind("Bw,3,", 0), 0U);
  EXPECT_NE(r.err.find("violations=0"), std::string::npos);
  std::ifstream v(violations);
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(v), {}), "");
}

TEST(Cli, VerifyJsonDocument) {
  const auto r = run({"verify", "--gnp", "9,0.4,5,6", "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 6U);
  EXPECT_EQ(j["summary"]["checked"], 6);
  EXPECT_EQ(j["summary"]["violations"], 0);
  EXPECT_TRUE(j["reports"][0]["bounds"].contains("theorem1"));
}

TEST(Cli, VerifyUndecidedExitCode) {
  const auto r = run({"verify", "--gnp", "60,0.5,1", "--budget-alpha", "2", "--budget-minor", "2",
                      "--budget-chi", "2", "--format", "csv"});
  EXPECT_EQ(r.code, mf::cli::kExitUndecided) << r.err;
}

TEST(Cli, VerifyExitCodeMapping) {
  mf::CorpusSummary s;
  s.checked = 3;
  EXPECT_EQ(mf::cli::verify_exit_code(s), 0);
  s.undecided = 1;
  EXPECT_EQ(mf::cli::verify_exit_code(s), mf::cli::kExitUndecided);
  s.violations = 1;
  EXPECT_EQ(mf::cli::verify_exit_code(s), mf::cli::kExitViolation);
}

TEST(Cli, VerifyDeterministicAcrossJobs) {
  const auto a = run({"verify", "--gnp", "10,0.5,3,20", "--format", "csv", "--jobs", "1"});
  const auto b = run({"verify", "--gnp", "10,0.5,3,20", "--format", "csv", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
  ::setenv("MINORFORGE_JOBS", "2", 1);
  const auto c = run({"verify", "--gnp", "10,0.5,3,20", "--format", "csv"});
  ::setenv("MINORFORGE_JOBS", "zero", 1);
  const auto d = run({"verify", "--gnp", "10,0.5,3,20", "--format", "csv"});
  ::unsetenv("MINORFORGE_JOBS");
  EXPECT_EQ(c.out, a.out);
  EXPECT_EQ(d.code, mf::cli::kExitUsage);
}

TEST(Cli, DomsetNotApplicable) {
  const auto corpus = temp_file("domset.g6", "Dhc\nCw\n");  // C5, then a triangle plus an isolated vertex
  const auto r = run({"domset", "--graph6", corpus.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["applicable"], false);
  EXPECT_EQ(j[0]["reason"], "claw-free");
  EXPECT_EQ(j[1]["applicable"], false);
  EXPECT_EQ(j[1]["reason"], "disconnected");
}

TEST(Cli, DomsetOnRandomSample) {
  const auto r = run({"domset", "--gnp", "20,0.3,42"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1U);
  if (j[0]["applicable"]) {
    EXPECT_EQ(j[0]["verified"], true);
    const auto& t = j[0]["trace"];
    EXPECT_EQ(t["D"].size(), 2 * t["k"].get<std::size_t>() + 4);
  } else {
    EXPECT_TRUE(j[0]["reason"] == "claw-free" || j[0]["reason"] == "disconnected");
  }
}

TEST(Cli, DomsetTraceOnStar) {
  const auto corpus = temp_file("star.g6", "CF\n");  // K_{1,3} centred at 3
  const auto j = json::parse(run({"domset", "--graph6", corpus.string()}).out);
  ASSERT_EQ(j[0]["applicable"], true);
  EXPECT_EQ(j[0]["trace"]["k"], 0);
  EXPECT_EQ(j[0]["trace"]["D"].size(), 4U);
  EXPECT_EQ(j[0]["trace"]["S"].size(), 3U);
  EXPECT_EQ(j[0]["trace"]["claw"]["center"], 3);
}

TEST(Cli, InvariantsAndPeel) {
  const auto corpus = temp_file("named.g6", "IheA@GUAo\n");
  const auto inv = json::parse(run({"invariants", "--graph6", corpus.string()}).out);
  EXPECT_EQ(inv[0]["graph6"], "IheA@GUAo");
  EXPECT_EQ(inv[0]["alpha"]["value"], 4);
  EXPECT_EQ(inv[0]["hadwiger"]["value"], 5);
  EXPECT_EQ(inv[0]["clawfree"], false);

  const auto csv = run({"invariants", "--graph6", corpus.string(), "--format", "csv"});
  EXPECT_EQ(lines(csv.out)[1], "IheA@GUAo,10,4,2,3,5,no,yes");

  const auto peel = json::parse(run({"peel", "--graph6", corpus.string()}).out);
  EXPECT_EQ(peel[0]["graph6"], "IheA@GUAo");
  EXPECT_GE(peel[0]["achieved"].get<int>(), 1);
  EXPECT_EQ(peel[0]["model"].size(), peel[0]["achieved"].get<std::size_t>());
}

TEST(Cli, OutFlagWritesFile) {
  const auto target = fs::temp_directory_path() / "minorforge_cli_out.csv";
  fs::remove(target);
  const auto r = run({"bounds-table", "--alpha", "2..3", "--h", "6", "--omega", "3", "--format",
                      "csv", "--out", target.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  const std::string body(std::istreambuf_iterator<char>(in), {});
  EXPECT_EQ(lines(body).size(), 3U);
}

TEST(Cli, SkippedLinesAreReported) {
  const auto corpus = temp_file("bad.g6", "Bw\nA!\n");
  const auto r = run({"invariants", "--graph6", corpus.string(), "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 2U);
  EXPECT_NE(r.err.find("line 2: skipped"), std::string::npos) << r.err;
}
