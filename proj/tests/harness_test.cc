// Copyright 2026 The SkewJoin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skewjoin/dataset_io.h"
#include "skewjoin/harness.h"
#include "skewjoin/report.h"
#include "skewjoin/sweep.h"
#include "test_util.h"

namespace skewjoin {
namespace {

using testing::dataset_of;

ExperimentConfig quick(std::optional<Strategy> s, std::uint32_t n) {
  ExperimentConfig c;
  c.strategy = s;
  c.cluster.n_nodes = n;
  c.repeat = 1;
  c.timing = false;
  return c;
}

TEST(OracleJoin, Examples) {
  EXPECT_EQ(oracle_join(dataset_of({1, 2, 2}), dataset_of({2, 3})).pairs,
            (std::vector<JoinPair>{{2, 1, 0}, {2, 2, 0}}));
  EXPECT_TRUE(oracle_join(dataset_of({1, 2}), dataset_of({3, 4})).pairs.empty());
  EXPECT_EQ(oracle_join(dataset_of(std::vector<Key>(60, 9)), dataset_of(std::vector<Key>(30, 9)))
                .pairs.size(),
            1800u);
}

TEST(SamePairs, IsMultisetEquality) {
  EXPECT_TRUE(same_pairs({{1, 0, 0}, {2, 1, 1}}, {{2, 1, 1}, {1, 0, 0}}));
  EXPECT_FALSE(same_pairs({{1, 0, 0}, {1, 0, 0}}, {{1, 0, 0}, {2, 0, 0}}));
  EXPECT_FALSE(same_pairs({{1, 0, 0}}, {}));
}

TEST(RunExperiment, SingleNodeHasNoTraffic) {
  WorkloadSpec spec;
  spec.r_rows = 3000;
  spec.s_rows = 500;
  const auto [r, s] = make_workload(spec);
  for (Strategy st : kAllStrategies) {
    auto c = quick(st, 1);
    c.merge_mode = MergeMode::kGather;
    c.verify = true;
    const auto rep = run_experiment(c, r, s);
    EXPECT_EQ(rep.metrics.cross_node_tuples, 0.0);
    EXPECT_EQ(rep.metrics.merge_traffic, 0.0);
    EXPECT_EQ(rep.verified, true);
  }
}

TEST(RunExperiment, ResultCountAgreesAcrossStrategies) {
  WorkloadSpec spec;
  spec.r_rows = 6000;
  spec.s_rows = 900;
  spec.r_z = 1.5;
  const auto [r, s] = make_workload(spec);
  const auto expected = oracle_join(r, s).pairs.size();
  for (std::optional<Strategy> st :
       {std::optional<Strategy>{}, std::optional{Strategy::kGraHJ}, std::optional{Strategy::kPRPD},
        std::optional{Strategy::kPRPDU}, std::optional{Strategy::kPRPDSfr},
        std::optional{Strategy::kPnR}}) {
    auto c = quick(st, 6);
    c.placement = "random";
    c.repeat = 3;
    c.verify = true;
    const auto rep = run_experiment(c, r, s);
    EXPECT_EQ(rep.metrics.result_count, expected);
    EXPECT_EQ(rep.verified, true);
    ASSERT_EQ(rep.metrics.per_node_processed.size(), 6u);
    double sum = 0;
    for (double v : rep.metrics.per_node_processed) sum += v;
    EXPECT_LE(rep.metrics.max_node_load, sum);
    EXPECT_EQ(rep.executed_per_run.size(), 3u);
    EXPECT_EQ(rep.cost_model.size(), kAllStrategies.size());
    EXPECT_EQ(rep.decision.has_value(), !st.has_value());
  }
}

TEST(RunExperiment, SwapsWhenProbeIsSmaller) {
  const auto rep = run_experiment(quick(Strategy::kGraHJ, 2), dataset_of({1, 2}),
                                  dataset_of({1, 1, 2, 3}));
  EXPECT_TRUE(rep.swapped);
  EXPECT_EQ(rep.r_rows, 4u);
  EXPECT_EQ(rep.s_rows, 2u);
  EXPECT_EQ(rep.metrics.result_count, 3u);
}

TEST(RunExperiment, RejectsBadConfig) {
  const Dataset d = dataset_of({1, 2, 3});
  EXPECT_THROW(run_experiment(quick(Strategy::kPnR, 0), d, d), ConfigError);
  auto gw = quick(Strategy::kPnR, 3);
  gw.cluster.gateway = 3;
  EXPECT_THROW(run_experiment(gw, d, d), ConfigError);
  auto pl = quick(Strategy::kPnR, 3);
  pl.placement = "hot:9";
  EXPECT_THROW(run_experiment(pl, d, d), ConfigError);
  auto th = quick(Strategy::kPnR, 3);
  th.threshold = 0;
  EXPECT_THROW(run_experiment(th, d, d), ConfigError);
}

TEST(RunExperiment, ThroughputFollowsWallTime) {
  WorkloadSpec spec;
  spec.r_rows = 20000;
  spec.s_rows = 2000;
  const auto [r, s] = make_workload(spec);
  auto c = quick(Strategy::kPnR, 4);
  c.timing = true;
  const auto rep = run_experiment(c, r, s);
  ASSERT_GT(rep.metrics.wall_ms, 0.0);
  EXPECT_NEAR(rep.metrics.throughput_tuples_per_s, 22000.0 / (rep.metrics.wall_ms / 1e3),
              1e-6 * rep.metrics.throughput_tuples_per_s);
}

TEST(Report, ByteIdenticalReruns) {
  WorkloadSpec spec;
  spec.r_rows = 5000;
  spec.s_rows = 700;
  auto c = quick(std::nullopt, 5);
  c.placement = "random";
  c.repeat = 2;
  c.merge_mode = MergeMode::kGather;
  const auto run = [&] {
    const auto [r, s] = make_workload(spec);
    return report_to_json(run_experiment(c, r, s, spec));
  };
  EXPECT_EQ(run(), run());
}

TEST(Report, JsonFields) {
  WorkloadSpec spec;
  spec.r_rows = 4000;
  spec.s_rows = 400;
  const auto [r, s] = make_workload(spec);
  auto c = quick(std::nullopt, 3);
  c.verify = true;
  const auto j = nlohmann::json::parse(report_to_json(run_experiment(c, r, s, spec)));
  for (const char* key : {"config", "metrics", "cost_model", "decision", "verified", "skew"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const char* key : {"result_count", "cross_node_tuples", "cross_node_bytes",
                          "per_node_processed", "max_node_load", "wall_ms",
                          "throughput_tuples_per_s"}) {
    EXPECT_TRUE(j["metrics"].contains(key)) << key;
  }
  EXPECT_EQ(j["config"]["nodes"], 3);
  EXPECT_EQ(j["config"]["dataset"]["r_rows"], 4000);
  EXPECT_EQ(j["metrics"]["per_node_processed"].size(), 3u);
  EXPECT_EQ(j["cost_model"].size(), 5u);
  EXPECT_EQ(j["decision"]["costs"].size(), 3u);
  EXPECT_TRUE(j["cost_model"]["pnr"].contains("summ"));
}

TEST(Sweep, ParsesAxesAndScalars) {
  std::istringstream in(R"(# comment
workload = single
strategies = grahj, pnr, auto
probe_skew = 0.01, 0.09   # trailing comment
nodes = 3,6
gateway =
r_rows = 1000
s_rows = 800
build_skew = 0.5
threshold = 0.05
merge = gather
placement = random
repeat = 2
verify = true
timing = false
)");
  const SweepConfig c = parse_sweep(in);
  EXPECT_EQ(c.workload.kind, WorkloadSpec::Kind::kSingleSkew);
  EXPECT_EQ(c.strategies.size(), 3u);
  EXPECT_FALSE(c.strategies[2].has_value());
  EXPECT_EQ(c.probe_skew, (std::vector<double>{0.01, 0.09}));
  EXPECT_EQ(c.nodes, (std::vector<std::uint32_t>{3, 6}));
  EXPECT_TRUE(c.gateways.empty());
  EXPECT_EQ(c.base.merge_mode, MergeMode::kGather);
  EXPECT_EQ(c.base.repeat, 2u);
  EXPECT_TRUE(c.base.verify);
  EXPECT_FALSE(c.base.timing);

  const auto points = expand_sweep(c);
  ASSERT_EQ(points.size(), 12u);
  EXPECT_EQ(points[0].config.cluster.n_nodes, 3u);
  EXPECT_EQ(points[0].workload.r_skew, 0.01);
  EXPECT_EQ(points[1].config.strategy, Strategy::kPnR);
  EXPECT_EQ(points[3].workload.r_skew, 0.09);
  EXPECT_EQ(points[6].config.cluster.n_nodes, 6u);

  const auto reports = run_sweep(c);
  ASSERT_EQ(reports.size(), 12u);
  for (const auto& r : reports) EXPECT_EQ(r.verified, true);
  std::ostringstream csv;
  write_reports_csv(csv, reports);
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 13);
  EXPECT_EQ(text.rfind("point,strategy,executed,nodes", 0), 0u);
}

TEST(Sweep, EmptyAxesGiveOneBaselineRow) {
  std::istringstream in("strategies = pnr\nr_rows = 2000\ns_rows = 300\nrepeat = 1\n");
  const auto c = parse_sweep(in);
  const auto points = expand_sweep(c);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0].workload.r_rows, 2000u);
  EXPECT_EQ(run_sweep(c).size(), 1u);
}

TEST(Sweep, RatioAndScale) {
  std::istringstream in("ratio = 2, 5\ns_rows = 100\npaper_scale = true\nzipf_z = 1.0, 1.5\n");
  const auto points = expand_sweep(parse_sweep(in));
  ASSERT_EQ(points.size(), 4u);
  EXPECT_EQ(points[0].workload.s_rows, 1000u);
  EXPECT_EQ(points[0].workload.r_rows, 2000u);
  EXPECT_EQ(points[1].workload.r_z, 1.5);
  EXPECT_EQ(points[1].workload.s_z, 1.5);
  EXPECT_EQ(points[2].workload.r_rows, 5000u);
}

TEST(Sweep, DiagnosesMalformedLines) {
  const auto error_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_sweep(in, "grid.cfg");
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(error_of("nodes = 3\nbogus = 1\n").rfind("grid.cfg:2:", 0), 0u);
  EXPECT_EQ(error_of("\n\nnodes 3\n").rfind("grid.cfg:3:", 0), 0u);
  EXPECT_EQ(error_of("nodes = 3, x\n").rfind("grid.cfg:1:", 0), 0u);
  EXPECT_EQ(error_of("strategies = fastest\n").rfind("grid.cfg:1:", 0), 0u);
  EXPECT_EQ(error_of("merge = scatter\n").rfind("grid.cfg:1:", 0), 0u);
  EXPECT_EQ(error_of("verify = maybe\n").rfind("grid.cfg:1:", 0), 0u);
  EXPECT_EQ(error_of("workload = normal\n").rfind("grid.cfg:1:", 0), 0u);
  EXPECT_EQ(error_of("ratio = -1\n").rfind("grid.cfg:1:", 0), 0u);
  EXPECT_THROW(load_sweep("/nonexistent/sweep.cfg"), ConfigError);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("skewjoin_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(SKEWJOIN_CLI) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string slurp(const std::string& name) const {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::filesystem::path dir_;
};

TEST_F(Cli, GenRunVerifyCost) {
  ASSERT_EQ(run("gen --rows 5000 --distinct 100 --zipf-z 1.3 --seed 4 --out " + path("r.bin") +
                " --csv " + path("r.csv")),
            0);
  ASSERT_EQ(run("gen --rows 800 --skew-key 1 --skew-frac 0.5 --distinct 50 --out " +
                path("s.bin")),
            0);
  EXPECT_EQ(load_dataset(path("r.bin")).size(), 5000u);
  EXPECT_EQ(slurp("r.csv").rfind("key\n", 0), 0u);

  const std::string files = " --r " + path("r.bin") + " --s " + path("s.bin");
  ASSERT_EQ(run("run" + files + " --nodes 4 --strategy auto --merge gather --placement random "
                "--repeat 2 --verify --no-timing --report " + path("rep.json")),
            0);
  const auto j = nlohmann::json::parse(slurp("rep.json"));
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["config"]["nodes"], 4);

  EXPECT_EQ(run("verify" + files + " --nodes 3 --placement hot:1"), 0);
  EXPECT_NE(slurp("stdout.txt").find("pnr: ok"), std::string::npos);
  EXPECT_EQ(run("cost" + files + " --nodes 5 --strategy pnr"), 0);
  EXPECT_NE(slurp("stdout.txt").find("\"prpd-sfr\""), std::string::npos);
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  ASSERT_EQ(run("gen --rows 10 --out " + path("d.bin")), 0);
  const std::string files = " --r " + path("d.bin") + " --s " + path("d.bin");
  EXPECT_EQ(run("run" + files + " --nodes 0"), 2);
  EXPECT_EQ(run("run" + files + " --nodes 3 --gateway 3"), 2);
  EXPECT_EQ(run("run" + files + " --strategy fastest"), 2);
  EXPECT_EQ(run("run" + files + " --placement hot:7 --nodes 2"), 2);
  EXPECT_EQ(run("run --r " + path("missing.bin") + " --s " + path("d.bin")), 2);
  EXPECT_EQ(run("run" + files + " --unknown-flag"), 2);
  EXPECT_EQ(run("gen --rows 10 --distinct 0 --out " + path("x.bin")), 2);
  std::ofstream(path("junk.bin")) << "JUNKJUNKJUNKJUNKJUNK";
  EXPECT_EQ(run("run --r " + path("junk.bin") + " --s " + path("d.bin")), 2);
  std::ofstream(path("bad.cfg")) << "nodes = 3\nnot a line\n";
  EXPECT_EQ(run("sweep --config " + path("bad.cfg")), 2);
  EXPECT_NE(slurp("stderr.txt").find("bad.cfg:2:"), std::string::npos);
}

TEST_F(Cli, SweepWritesJsonAndCsv) {
  std::ofstream(path("grid.cfg")) << "strategies = grahj, pnr\nnodes = 2, 3\nr_rows = 1500\n"
                                     "s_rows = 300\nrepeat = 1\ntiming = false\n";
  ASSERT_EQ(run("sweep --config " + path("grid.cfg") + " --report " + path("out.json") +
                " --csv " + path("out.csv")),
            0);
  EXPECT_EQ(nlohmann::json::parse(slurp("out.json")).size(), 4u);
  const std::string csv = slurp("out.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
}  // namespace skewjoin
