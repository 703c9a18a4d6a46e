// Copyright 2026 The hexloss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace hexloss::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"hexloss"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hexloss_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, SampleWritesDeterministicCsv) {
  const auto a = path("a.csv"), b = path("b.csv");
  for (const auto& p : {a, b}) {
    const auto r = run({"sample", "--shape", "hexagon", "--side", "1000", "--count",
                        "10000", "--seed", "42", "--out", p});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  const auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.substr(0, text.find('\n')), "x_m,y_m,r_m,w_db,psi_db,lp_db");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10001);
}

TEST_F(Cli, SampleToStdout) {
  const auto r = run({"sample", "--count", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST_F(Cli, SampleWorkersMatchAcrossRuns) {
  const auto a = run({"sample", "--count", "1000", "--seed", "3", "--workers", "3"});
  const auto b = run({"sample", "--count", "1000", "--seed", "3", "--workers", "3"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, PdfWritesCurveAndSidecars) {
  const auto csv = path("d.csv");
  const auto r = run({"pdf", "--preset", "urban-macro", "--side", "1000", "--from", "60",
                      "--to", "200", "--step", "0.1", "--out", csv, "--meta",
                      path("d.json"), "--gnuplot", path("d.gp")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto text = slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "l_db,f_closed");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1402);
  EXPECT_NE(slurp(path("d.json")).find("urban-macro"), std::string::npos);
  EXPECT_NE(slurp(path("d.gp")).find(csv), std::string::npos);
}

TEST_F(Cli, PdfOracleColumnAndSeriesMethod) {
  const auto r = run({"pdf", "--preset", "urban-micro-los", "--from", "100", "--to", "102",
                      "--step", "1", "--with-oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "l_db,f_closed,f_oracle");
  const auto s = run({"pdf", "--preset", "urban-micro-los", "--from", "100", "--to", "102",
                      "--step", "1", "--method", "series"});
  EXPECT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(run({"pdf", "--preset", "urban-macro", "--method", "simpson"}).code, kExitUsage);
}

TEST_F(Cli, PdfIsByteIdentical) {
  auto args = {std::string("pdf"), std::string("--preset"), std::string("suburban-macro"),
               std::string("--from"), std::string("110"), std::string("--to"),
               std::string("130"), std::string("--step"), std::string("0.5")};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, VerifyPassesAndReports) {
  const auto report = path("r.json");
  const auto r = run({"verify", "--preset", "suburban-macro", "--side", "1000", "--count",
                      "10000", "--seed", "7", "--report", report, "--out", path("s.csv"),
                      "--gnuplot", path("s.gp")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto json = slurp(report);
  EXPECT_NE(json.find("\"pass\": true"), std::string::npos) << json;
  EXPECT_NE(json.find("\"seed\": 7"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("s.csv")));
  EXPECT_TRUE(fs::exists(path("s.gp")));
}

TEST_F(Cli, PresetsListing) {
  const auto r = run({"presets"});
  ASSERT_EQ(r.code, kExitOk);
  for (const char* n : {"suburban-macro", "urban-macro", "urban-micro-nlos", "urban-micro-los"}) {
    EXPECT_NE(r.out.find(n), std::string::npos);
  }
  const auto j = run({"presets", "--json"});
  EXPECT_NE(j.out.find("\"alpha_prime_db\": 30.18"), std::string::npos);
}

TEST_F(Cli, PresetsFileOverride) {
  const auto file = path("p.json");
  {
    std::ofstream o(file);
    o << R"([{"name": "tiny", "alpha_prime_db": 30, "beta_db_per_decade": 30,
              "sigma_psi_db": 5, "r0_m": 5, "cell_radius_min_m": 50,
              "cell_radius_max_m": 150, "model_label": "test"}])";
  }
  const auto r = run({"--presets-file", file, "presets"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("tiny"), std::string::npos);
  EXPECT_EQ(r.out.find("urban-macro"), std::string::npos);
  const auto v = run({"--presets-file", file, "verify", "--preset", "tiny", "--count", "2000"});
  EXPECT_EQ(v.code, kExitOk) << v.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"pdf"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--preset", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"sample", "--shape", "square"}).code, kExitUsage);
  EXPECT_EQ(run({"sample", "--count", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"pdf", "--preset", "urban-macro", "--gnuplot", path("x.gp")}).code,
            kExitUsage);
  const auto bad = run({"verify", "--preset", "urban-macro", "--side", "100"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(run({"--presets-file", path("missing.json"), "presets"}).code, kExitUsage);
}

TEST_F(Cli, AnyRadiusOverridesRangeWithWarning) {
  const auto r = run({"verify", "--preset", "urban-macro", "--side", "400", "--count",
                      "2000", "--any-radius"});
  EXPECT_NE(r.code, kExitUsage) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace hexloss::cli
