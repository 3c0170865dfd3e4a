// Copyright 2026 The ssyk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qasm_grammar.hpp"
#include "ssyk/circuit.hpp"
#include "ssyk/cli.hpp"
#include "ssyk/syk_model.hpp"

namespace ssyk {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("ssyk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string dir(const std::string& name) const { return (root_ / name).string(); }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path root_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, GenerateWritesInstancesAndManifest) {
  ASSERT_EQ(run({"generate", "--N", "8", "--p", "1", "--seeds", "1,2", "--out", dir("a")}), 0)
      << err_.str();
  const auto inst = instance_from_json(slurp(root_ / "a/instances/N8_p1_s1.json"));
  EXPECT_EQ(inst.terms.size(), 70u);
  EXPECT_EQ(inst.p, 1.0);
  const auto m = json::parse(slurp(root_ / "a/manifest.json"));
  EXPECT_EQ(m["command"], "generate");
  EXPECT_EQ(m["seeds"], json::array({1, 2}));
  EXPECT_EQ(m["artifacts"].size(), 2u);
  EXPECT_TRUE(m.contains("config_hash"));
}

TEST_F(CliTest, DegreeModeRecordsProbability) {
  ASSERT_EQ(run({"generate", "--N", "6", "--k", "8.7", "--seeds", "7", "--out", dir("a")}), 0);
  const auto inst = instance_from_json(slurp(root_ / "a/instances/N6_k8.7_s7.json"));
  EXPECT_NEAR(inst.p, 24 * 8.7 / 216.0, 1e-12);
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::vector<std::string> base{"compile", "--N", "6,8", "--k", "4", "--seed-count", "3",
                                      "--order", "2", "--t", "0.5"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", dir("a"), "--threads", "4"});
  b.insert(b.end(), {"--out", dir("b"), "--threads", "1"});
  ASSERT_EQ(run(a), 0) << err_.str();
  ASSERT_EQ(run(b), 0) << err_.str();
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(root_ / "a")) {
    if (!e.is_regular_file()) continue;
    const auto rel = fs::relative(e.path(), root_ / "a");
    const std::string other = slurp(root_ / "b" / rel);
    if (rel == "manifest.json") {
      // Only the out path and thread count may differ.
      auto ja = json::parse(slurp(e.path())), jb = json::parse(other);
      EXPECT_EQ(ja["artifacts"], jb["artifacts"]);
      EXPECT_EQ(ja["seeds"], jb["seeds"]);
      continue;
    }
    EXPECT_EQ(slurp(e.path()), other) << rel;
    ++files;
  }
  EXPECT_EQ(files, 6u * 2 + 1);
}

TEST_F(CliTest, CompiledQasmParsesBack) {
  ASSERT_EQ(run({"compile", "--N", "8", "--k", "8.7", "--seeds", "3", "--r", "2", "--out", dir("a")}), 0);
  const std::string text = slurp(root_ / "a/qasm/N8_k8.7_s3.qasm");
  EXPECT_EQ(testing::QasmGrammar::check(text), "");
  const Circuit c = parse_qasm(text);
  EXPECT_EQ(c.num_qubits(), 4u);
  EXPECT_EQ(emit_qasm(c), text);
  EXPECT_NE(out_.str().find("N8_k8.7_s3,8,3,"), std::string::npos);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  {
    std::ofstream cfg(root_ / "cfg.json");
    cfg << R"({"N": [6], "p": [0.5], "seed_count": 2, "order": 1, "t": 0.25})";
  }
  ASSERT_EQ(run({"count", "--config", dir("cfg.json"), "--seed-count", "3", "--out", dir("a")}), 0)
      << err_.str();
  const auto m = json::parse(slurp(root_ / "a/manifest.json"));
  EXPECT_EQ(m["seeds"], json::array({1, 2, 3}));  // flag wins
  EXPECT_EQ(m["config"]["order"], 1);
  EXPECT_EQ(m["config"]["N"], json::array({6}));

  {
    std::ofstream cfg(root_ / "bad.json");
    cfg << R"({"N": [6], "p": [0.5], "colour": "degree"})";
  }
  EXPECT_EQ(run({"count", "--config", dir("bad.json"), "--out", dir("b")}), cli::kExitConfig);
  EXPECT_NE(err_.str().find("colour"), std::string::npos);
}

TEST_F(CliTest, ConfigHashTracksSettings) {
  cli::RunConfig a;
  a.command = "count";
  a.N = {8};
  a.p = {1.0};
  cli::RunConfig b = a;
  EXPECT_EQ(a.hash(), b.hash());
  b.order = 1;
  EXPECT_NE(a.hash(), b.hash());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}), cli::kExitConfig);
  EXPECT_EQ(run({"generate", "--N", "7", "--p", "1", "--out", dir("a")}), cli::kExitConfig);
  EXPECT_EQ(run({"generate", "--N", "8", "--p", "1", "--k", "2", "--out", dir("a")}), cli::kExitConfig);
  EXPECT_EQ(run({"generate", "--N", "8", "--p", "1.5", "--out", dir("a")}), cli::kExitConfig);
  EXPECT_EQ(run({"compile", "--N", "8", "--p", "1", "--order", "3", "--out", dir("a")}), cli::kExitConfig);
  EXPECT_EQ(run({"generate", "--instance", dir("missing.json"), "--out", dir("a")}), cli::kExitConfig);
  EXPECT_EQ(run({"frobnicate"}), cli::kExitConfig);
}

TEST_F(CliTest, VerifyCertifiesAndFlagsUnsoundScaling) {
  ASSERT_EQ(run({"verify", "--N", "6,8", "--k", "8.7", "--seed-count", "3", "--t", "0.5",
                 "--out", dir("a")}),
            cli::kExitOk)
      << out_.str() << err_.str();
  const auto v = json::parse(slurp(root_ / "a/reports/verify.json"));
  ASSERT_EQ(v.size(), 6u);
  for (const auto& e : v) EXPECT_EQ(e["status"], "pass");

  // With J = 0.1 the printed J^2 prefactor shrinks the bound below the
  // measured error.
  EXPECT_EQ(run({"verify", "--N", "8", "--p", "1", "--J", "0.1", "--seeds", "1", "--order", "1",
                 "--r", "1", "--coupling-prefactors", "--out", dir("b")}),
            cli::kExitCertification)
      << out_.str();
}

TEST_F(CliTest, VerifySkipsWideInstances) {
  ASSERT_EQ(run({"verify", "--N", "16", "--k", "4", "--seeds", "1", "--bound", "pauli", "--out",
                 dir("a")}),
            cli::kExitOk);
  const auto v = json::parse(slurp(root_ / "a/reports/verify.json"));
  EXPECT_EQ(v[0]["status"], "skipped");
}

TEST_F(CliTest, InstanceFileRoundTrip) {
  ASSERT_EQ(run({"generate", "--N", "6", "--p", "1", "--seeds", "4", "--out", dir("a")}), 0);
  ASSERT_EQ(run({"bound", "--instance", dir("a/instances/N6_p1_s4.json"), "--out", dir("b")}), 0)
      << err_.str();
  ASSERT_EQ(run({"bound", "--N", "6", "--p", "1", "--seeds", "4", "--out", dir("c")}), 0);
  const auto b = json::parse(slurp(root_ / "b/reports/bounds.json"));
  const auto c = json::parse(slurp(root_ / "c/reports/bounds.json"));
  EXPECT_EQ(b[0]["exact"], c[0]["exact"]);
  EXPECT_EQ(b[0]["pauli"], c[0]["pauli"]);
}

TEST_F(CliTest, ShardedCountsMatchWholeRun) {
  auto mean_of = [&](const fs::path& csv) {
    std::istringstream in(slurp(csv));
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    std::vector<std::string> cells;
    std::stringstream rs(row);
    for (std::string cell; std::getline(rs, cell, ',');) cells.push_back(cell);
    return std::stod(cells.at(5));
  };
  ASSERT_EQ(run({"count", "--N", "10", "--k", "4", "--seed-count", "4", "--out", dir("all")}), 0);
  ASSERT_EQ(run({"count", "--N", "10", "--k", "4", "--seed-count", "2", "--out", dir("s1")}), 0);
  ASSERT_EQ(run({"count", "--N", "10", "--k", "4", "--seed-count", "2", "--seed-start", "3",
                 "--out", dir("s2")}),
            0);
  EXPECT_NEAR(mean_of(root_ / "all/reports/counts.csv"),
              0.5 * (mean_of(root_ / "s1/reports/counts.csv") + mean_of(root_ / "s2/reports/counts.csv")),
              1e-6);
}

TEST_F(CliTest, SweepWritesFits) {
  ASSERT_EQ(run({"sweep", "--N", "8,10,12", "--k", "4,8", "--seed-count", "2", "--order", "1",
                 "--out", dir("a")}),
            0)
      << err_.str();
  const auto f = json::parse(slurp(root_ / "a/reports/fits.json"));
  EXPECT_EQ(f["vs_N"].size(), 2u);
  EXPECT_EQ(f["vs_k"].size(), 3u);
  for (const auto& e : f["vs_N"]) EXPECT_GT(e["cnot_slope"].get<double>(), 0.0);
}

TEST(LogLogSlope, RecoversPowerLaw) {
  const std::vector<double> x{2, 4, 8, 16}, y{3 * 8.0, 3 * 64.0, 3 * 512.0, 3 * 4096.0};
  EXPECT_NEAR(cli::loglog_slope(x, y), 3.0, 1e-12);
}

}  // namespace
}  // namespace ssyk
