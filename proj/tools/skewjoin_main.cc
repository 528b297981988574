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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skewjoin/dataset_io.h"
#include "skewjoin/harness.h"
#include "skewjoin/report.h"
#include "skewjoin/sweep.h"

namespace sj = skewjoin;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

struct GenArgs {
  std::uint64_t rows = 0;
  std::uint64_t distinct = 1000;
  double zipf_z = 1.2;
  sj::Key skew_key = 0;
  std::optional<double> skew_frac;
  std::uint32_t payload_width = 8;
  std::uint64_t seed = 1;
  std::string out;
  std::string csv;
};

struct RunArgs {
  std::string r_path, s_path;
  std::uint32_t nodes = 12;
  std::string strategy = "auto";
  double threshold = 0.05;
  sj::NodeId gateway = 0;
  std::uint64_t hash_offset = 0;
  std::string merge = "local";
  std::string placement = "balanced";
  std::uint64_t seed = 1;
  unsigned repeat = 10;
  unsigned workers = 1;
  bool verify = false;
  bool no_timing = false;
  std::string report;
};

void add_run_options(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--r", a.r_path, "probe table (dataset file)")->required();
  cmd->add_option("--s", a.s_path, "build table (dataset file)")->required();
  cmd->add_option("--nodes", a.nodes, "cluster size N");
  cmd->add_option("--strategy", a.strategy, "grahj, prpd, prpd-u, prpd-sfr, pnr or auto");
  cmd->add_option("--threshold", a.threshold, "skew threshold p");
  cmd->add_option("--gateway", a.gateway, "node receiving gathered results");
  cmd->add_option("--hash-offset", a.hash_offset, "h(x) = (x + offset) mod N");
  cmd->add_option("--merge", a.merge, "gather or local");
  cmd->add_option("--placement", a.placement, "balanced, hot:K or random");
  cmd->add_option("--seed", a.seed, "placement seed");
  cmd->add_option("--workers", a.workers, "threads for the node-local joins");
}

sj::ExperimentConfig make_config(const RunArgs& a) {
  sj::ExperimentConfig c;
  c.strategy = sj::parse_strategy_label(a.strategy);
  c.cluster.n_nodes = a.nodes;
  c.cluster.gateway = a.gateway;
  c.cluster.hash_offset = a.hash_offset;
  c.threshold = a.threshold;
  c.merge_mode = sj::parse_merge_mode(a.merge);
  c.placement = a.placement;
  c.placement_seed = a.seed;
  c.repeat = a.repeat;
  c.workers = a.workers;
  c.verify = a.verify;
  c.timing = !a.no_timing;
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw sj::ConfigError("cannot write '" + path + "'");
  out << text << '\n';
}

int cmd_gen(const GenArgs& a) {
  sj::Dataset ds;
  try {
    if (a.skew_frac) {
      ds = sj::gen_single_skew(
          {a.skew_key, *a.skew_frac, a.rows, a.distinct, a.seed, a.payload_width});
    } else {
      ds = sj::gen_zipf({a.distinct, a.zipf_z, a.rows, a.seed, a.payload_width});
    }
  } catch (const std::invalid_argument& e) {
    throw sj::ConfigError(e.what());
  }
  sj::save_dataset(a.out, ds);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw sj::ConfigError("cannot write '" + a.csv + "'");
    sj::write_keys_csv(csv, ds);
  }
  return 0;
}

int cmd_run(const RunArgs& a) {
  const auto report = sj::run_experiment(make_config(a), sj::load_dataset(a.r_path),
                                         sj::load_dataset(a.s_path));
  emit(sj::report_to_json(report), a.report);
  if (report.verified && !*report.verified) {
    std::cerr << "verification failed: result differs from the nested-loop oracle\n";
    return kExitMismatch;
  }
  return 0;
}

int cmd_cost(RunArgs a) {
  sj::ExperimentConfig c = make_config(a);
  c.execute = false;
  c.repeat = 1;
  c.verify = false;
  const auto report =
      sj::run_experiment(c, sj::load_dataset(a.r_path), sj::load_dataset(a.s_path));
  std::string text = sj::costs_to_json(report.cost_model);
  if (report.decision) {
    text += "\nchosen: " + std::string(sj::to_string(report.decision->chosen));
  }
  emit(text, a.report);
  return 0;
}

int cmd_verify(RunArgs a) {
  const sj::Dataset r = sj::load_dataset(a.r_path);
  const sj::Dataset s = sj::load_dataset(a.s_path);
  std::vector<std::optional<sj::Strategy>> strategies;
  if (a.strategy == "all") {
    for (sj::Strategy st : sj::kAllStrategies) strategies.emplace_back(st);
    strategies.emplace_back(std::nullopt);
  } else {
    strategies.push_back(sj::parse_strategy_label(a.strategy));
  }
  a.strategy = "auto";
  int status = 0;
  for (const auto& st : strategies) {
    sj::ExperimentConfig c = make_config(a);
    c.strategy = st;
    c.verify = true;
    c.repeat = 1;
    c.timing = false;
    const auto report = sj::run_experiment(c, r, s);
    const bool ok = report.verified.value_or(false);
    std::cout << sj::strategy_label(st) << ": " << (ok ? "ok" : "MISMATCH") << " ("
              << report.metrics.result_count << " pairs)\n";
    if (!ok) status = kExitMismatch;
  }
  return status;
}

int cmd_sweep(const std::string& config, const std::string& report, const std::string& csv) {
  const auto reports = sj::run_sweep(sj::load_sweep(config));
  emit(sj::reports_to_json(reports), report);
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw sj::ConfigError("cannot write '" + csv + "'");
    sj::write_reports_csv(out, reports);
  }
  for (const auto& r : reports) {
    if (r.verified && !*r.verified) return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew-aware distributed join simulator"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "synthesize a dataset file");
  gen_cmd->add_option("--rows", gen.rows, "tuple count")->required();
  gen_cmd->add_option("--distinct", gen.distinct, "distinct keys (Zipf) or non-skew keys");
  gen_cmd->add_option("--zipf-z", gen.zipf_z, "Zipf factor");
  gen_cmd->add_option("--skew-key", gen.skew_key, "single skewed key");
  gen_cmd->add_option("--skew-frac", gen.skew_frac, "fraction of rows on --skew-key");
  gen_cmd->add_option("--payload-width", gen.payload_width, "payload bytes per tuple");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out, "output dataset file")->required();
  gen_cmd->add_option("--csv", gen.csv, "also export keys as CSV");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "execute one join");
  add_run_options(run_cmd, run);
  run_cmd->add_option("--repeat", run.repeat, "placements averaged per report");
  run_cmd->add_flag("--verify", run.verify, "compare with the nested-loop oracle");
  run_cmd->add_flag("--no-timing", run.no_timing, "zero wall-clock fields");
  run_cmd->add_option("--report", run.report, "JSON report file (default stdout)");

  RunArgs cost;
  auto* cost_cmd = app.add_subcommand("cost", "print modelled costs without executing");
  add_run_options(cost_cmd, cost);
  cost_cmd->add_option("--report", cost.report, "output file (default stdout)");

  RunArgs verify;
  verify.strategy = "all";
  auto* verify_cmd = app.add_subcommand("verify", "check strategies against the oracle");
  add_run_options(verify_cmd, verify);

  std::string sweep_config, sweep_report, sweep_csv;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a grid of experiments");
  sweep_cmd->add_option("--config", sweep_config, "sweep config file")->required();
  sweep_cmd->add_option("--report", sweep_report, "JSON report file (default stdout)");
  sweep_cmd->add_option("--csv", sweep_csv, "CSV table file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*cost_cmd) return cmd_cost(cost);
    if (*verify_cmd) return cmd_verify(verify);
    if (*sweep_cmd) return cmd_sweep(sweep_config, sweep_report, sweep_csv);
  } catch (const sj::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sj::DatasetFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
