#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "uep/bounds.hpp"

namespace {

using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(UEP_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty()) {
    const std::string path = testing::TempDir() + "cli_stdin.txt";
    std::ofstream(path) << input;
    cmd = "cat " + path + " | " + cmd;
  }
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp(const std::string& name) { return testing::TempDir() + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

json bound_json(const std::string& args) {
  const auto r = run("--json bound " + args);
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

TEST(CliBound, UnionExample) {
  const auto j = bound_json("--n 8 --log2B 2 --dA 3 --dB 2 --which union");
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["guaranteed"], "2");
  EXPECT_EQ(j[0]["exact"]["numerator"], "229");
  EXPECT_EQ(j[0]["exact"]["denominator"], "148");
}

TEST(CliBound, HammingExample) {
  EXPECT_EQ(bound_json("--n 8 --log2B 2 --dA 3 --dB 2 --which hamming --hamming-radius ceil")[0]["guaranteed"], "7");
  EXPECT_EQ(bound_json("--n 8 --log2B 2 --dA 3 --dB 2 --which hamming")[0]["guaranteed"], "64");
}

TEST(CliBound, ClassicExample) {
  EXPECT_EQ(bound_json("--n 7 --log2B 0 --dA 3 --dB 1 --which classic")[0]["guaranteed"], "5");
}

TEST(CliBound, JsonRationalsRoundTrip) {
  const auto j = bound_json("--n 60 --log2B 20 --dA 9 --dB 3 --which union,cube,eep,hamming");
  const uep::TwoLevelParams p{60, uep::pow2(20), 9, 3};
  const uep::Rational expect[] = {uep::uep_union_bound(p).exact_value, uep::uep_cube_bound(p).exact_value,
                                  uep::eep_bound(p).exact_value, uep::hamming_converse(p).exact_value};
  ASSERT_EQ(j.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto q = uep::make_rational(uep::Count(j[i]["exact"]["numerator"].get<std::string>()),
                                      uep::Count(j[i]["exact"]["denominator"].get<std::string>()));
    EXPECT_EQ(q, expect[i]) << i;
  }
}

TEST(CliBound, LargeBAsDecimal) {
  const auto a = bound_json("--n 80 --B 1099511627776 --dA 5 --dB 2 --which union");
  const auto b = bound_json("--n 80 --log2B 40 --dA 5 --dB 2 --which union");
  EXPECT_EQ(a, b);
}

TEST(CliBound, CsvFile) {
  const auto path = temp("bound.csv");
  EXPECT_EQ(run("--csv " + path + " bound --n 8 --log2B 2 --dA 3 --dB 2 --which union,eep").code, 0);
  const auto rows = csv_rows(slurp(path));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], "union");
  EXPECT_EQ(rows[1][2], "229");
}

TEST(CliBound, InfeasibleInAllModeIsReportedNotFatal) {
  const auto j = bound_json("--n 8 --log2B 4 --dA 5 --dB 2");
  bool seen = false;
  for (const auto& row : j) seen = seen || row.contains("infeasible");
  EXPECT_TRUE(seen);
}

TEST(CliExitCodes, Contract) {
  EXPECT_EQ(run("bound --n 8 --log2B 2 --dA 2 --dB 2").code, 2);
  EXPECT_EQ(run("bound --n 8 --dA 3").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("bound --n 8 --log2B 4 --dA 5 --dB 2 --which cube").code, 3);
  EXPECT_EQ(run("construct --mode greedy --n 30 --shape 2 --profile 3").code, 3);
  EXPECT_EQ(run("verify -", "not a codebook\n").code, 2);
  EXPECT_EQ(run("verify - --require 4", "uep v1 n=3 shape=2 profile=3\n0\t000\n1\t111\n").code, 4);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(CliSweep, SinglePoint) {
  const auto r = run("sweep --vary dB --start 3 --stop 3 --n 100 --log2B 10 --dA 30");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].size(), 8u);
  EXPECT_EQ(rows[1][0], "3");
}

TEST(CliSweep, MaxUepDominatesTimeSharing) {
  const auto path = temp("sweep.csv");
  ASSERT_EQ(run("--csv " + path + " sweep --vary dB --start 1 --stop 29 --n 100 --log2B 10 --dA 30").code, 0);
  const auto rows = csv_rows(slurp(path));
  ASSERT_EQ(rows.size(), 30u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 8u);
    EXPECT_EQ(rows[i][0], std::to_string(i));
    if (!rows[i][1].empty() && !rows[i][5].empty()) {
      EXPECT_GE(std::stod(rows[i][4]), std::stod(rows[i][5]) - 1e-9);
    }
  }
}

TEST(CliSweep, InfeasiblePointsHaveEmptyCells) {
  const auto r = run("sweep --vary n --start 12 --stop 13 --log2B 3 --dA 9 --dB 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(csv_rows(r.out)[1][1], "");
}

TEST(CliMinlen, TimeSharingExamples) {
  const auto a = json::parse(run("--json minlen --log2A 2 --log2B 4 --dA 5 --dB 4").out);
  EXPECT_EQ(a[0]["n_ts_gv"], 24);
  const auto b = json::parse(run("--json minlen --log2A 2 --log2B 4 --dA 7 --dB 4").out);
  EXPECT_EQ(b[0]["n_ts_gv"], 28);
  const auto c = json::parse(run("--json minlen --log2A 2 --log2B 3 --dA 6 --dB 4").out);
  EXPECT_EQ(c[0]["n_ts_gv"], 24);
}

TEST(CliMinlen, ReferenceRowsMatchGolden) {
  const auto path = temp("reference_lengths.csv");
  ASSERT_EQ(run("--csv " + path + " minlen --reference").code, 0);
  const auto got = csv_rows(slurp(path));
  const auto want = csv_rows(slurp(UEP_GOLDEN_DIR "/reference_lengths.csv"));
  ASSERT_EQ(got.size(), want.size());
  const auto col = [](const std::vector<std::string>& header, const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  for (const std::string name : {"log2A", "log2B", "dA", "dB", "n_ts_gv", "n_uep", "external_n_ts_best", "external_n_luep"}) {
    const auto g = col(got[0], name);
    const auto w = col(want[0], name);
    ASSERT_LT(g, got[0].size()) << name;
    ASSERT_LT(w, want[0].size()) << name;
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_EQ(got[i][g], want[i][w]) << name << " row " << i;
  }
}

TEST(CliMinlen, HumanTableLabelsExternalColumns) {
  const auto r = run("minlen --reference");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("external"), std::string::npos);
}

TEST(CliConstruct, GreedyThenVerify) {
  const auto path = temp("greedy.txt");
  ASSERT_EQ(run("construct --mode greedy --n 8 --shape 2,4 --profile 3,2 --seed 7 --out " + path).code, 0);
  const auto v = run("--json verify " + path + " --require 3,2");
  EXPECT_EQ(v.code, 0);
  const auto j = json::parse(v.out);
  EXPECT_GE(j["profile"][0].get<int>(), 3);
  EXPECT_GE(j["profile"][1].get<int>(), 2);
  EXPECT_TRUE(j["satisfies_require"].get<bool>());
}

TEST(CliConstruct, LinearSearch) {
  const auto r = run("construct --mode luep --n 8 --kA 1 --kB 2 --dA 3 --dB 2 --seed 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("uep v1 n=8 shape=2,4", 0), 0u);
  EXPECT_EQ(run("verify - --require 3,2", r.out).code, 0);
  EXPECT_EQ(run("construct --mode luep --n 8 --kA 1 --kB 2 --dA 3 --dB 2 --seed 1").out, r.out);
  EXPECT_EQ(run("construct --mode luep --n 8 --kA 1 --kB 2 --dA 3 --dB 2").code, 2);
  EXPECT_EQ(run("construct --mode luep --n 7 --kA 1 --kB 3 --dA 3 --dB 2 --seed 1").code, 2);
}

TEST(CliConstruct, CubeAndBall) {
  for (const std::string mode : {"cube", "ball"}) {
    const auto r = run("construct --mode " + mode + " --n 12 --log2B 2 --dA 3 --dB 2");
    ASSERT_EQ(r.code, 0) << mode;
    EXPECT_EQ(run("verify - --require 3,2", r.out).code, 0) << mode;
  }
}

TEST(CliVerify, HandMadePair) {
  const auto r = run("--json verify -", "uep v1 n=3 shape=2 profile=3\n0\t000\n1\t111\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["profile"], json::array({3}));
}

TEST(CliAsym, RemarkExamples) {
  const auto a = json::parse(run("--json asym --betaB 0.001 --RB 0.7 --betaA 0.052").out);
  EXPECT_TRUE(a["condition_rate_improve"].get<bool>());
  const auto b = json::parse(run("--json asym --betaB 0.01 --RB 0.5 --betaA 0.1").out);
  EXPECT_TRUE(b["condition_rate_improve"].get<bool>());
}

TEST(CliAsym, SmokeOutsideRegime) {
  const auto r = run("--json asym --betaB 0.3 --RB 0.9 --betaA 0.31");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j.contains("Gamma_exponent"));
  EXPECT_TRUE(j.contains("condition_rate_improve"));
  EXPECT_EQ(run("asym --betaB 0.3 --RB 0.9 --betaA 0.2").code, 2);
}

}  // namespace
