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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewjoin/costmodel.h"
#include "skewjoin/datagen.h"
#include "skewjoin/dispatcher.h"
#include "skewjoin/exec.h"

namespace skewjoin {

// Invalid experiment or sweep configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Synthetic probe/build pair. Zipf tables share the key domain 1..n_distinct;
// single-skew tables share skew_key and the evenly spread remainder keys.
struct WorkloadSpec {
  enum class Kind { kZipf, kSingleSkew };

  Kind kind = Kind::kZipf;
  std::uint64_t r_rows = 39100;
  std::uint64_t s_rows = 1900;
  std::uint64_t n_distinct = 1000;
  double r_z = 1.2;
  double s_z = 1.2;
  Key skew_key = 0;
  double r_skew = 0.0;  // fraction of R carrying skew_key
  double s_skew = 0.5;  // fraction of S carrying skew_key
  std::uint64_t distinct_rest = 1000;
  std::uint32_t payload_width = 8;
  std::uint64_t seed = 1;

  bool operator==(const WorkloadSpec&) const = default;
};

// R is generated from mix_seed(seed, 0), S from mix_seed(seed, 1).
std::pair<Dataset, Dataset> make_workload(const WorkloadSpec& spec);

struct ExperimentConfig {
  std::optional<Strategy> strategy;  // nullopt runs the dispatcher ("auto")
  ClusterSpec cluster;
  double threshold = 0.05;
  MergeMode merge_mode = MergeMode::kLocalAggregate;
  std::string placement = "balanced";
  std::uint64_t placement_seed = 1;  // repeat i uses placement_seed + i
  unsigned repeat = 10;
  bool verify = false;
  bool execute = true;  // false stops after classification and costing
  bool timing = true;  // false zeroes wall-clock fields for reproducible reports
  unsigned workers = 1;
  CostWeights weights;
};

std::string strategy_label(const std::optional<Strategy>& s);  // "auto" for nullopt
std::optional<Strategy> parse_strategy_label(const std::string& name);  // throws ConfigError
std::string to_string(MergeMode m);
MergeMode parse_merge_mode(const std::string& name);  // "gather" | "local"; throws ConfigError

// Measured values, averaged over repeats.
struct RunMetrics {
  std::uint64_t result_count = 0;
  double cross_node_tuples = 0;
  double cross_node_bytes = 0;
  double skewed_cross_node_tuples = 0;
  std::vector<double> per_node_processed;
  double max_node_load = 0;
  double merge_traffic = 0;
  double wall_ms = 0;
  double throughput_tuples_per_s = 0;
};

struct SkewSummary {
  std::size_t rho_r = 0, rho_s = 0;
  std::size_t partial_r = 0, partial_s = 0;
  std::size_t complete_left = 0, complete_right = 0;
};

struct RunReport {
  ExperimentConfig config;
  std::optional<WorkloadSpec> workload;
  std::uint64_t r_rows = 0;
  std::uint64_t s_rows = 0;
  bool swapped = false;  // inputs arrived with |R| < |S| and were exchanged
  Strategy executed = Strategy::kGraHJ;  // strategy of the first repeat
  std::vector<Strategy> executed_per_run;
  SkewSummary skew;
  RunMetrics metrics;
  std::map<Strategy, CostBreakdown> cost_model;  // every strategy, first repeat
  std::optional<Decision> decision;              // auto only, first repeat
  std::optional<bool> verified;                  // --verify only
};

// Nested-loop join, pairs ordered by (R row, S row).
JoinResult oracle_join(const Dataset& r, const Dataset& s);

// Multiset equality of two pair lists.
bool same_pairs(std::vector<JoinPair> a, std::vector<JoinPair> b);

// Places, classifies, plans, routes, joins and merges. Throws ConfigError on an
// invalid cluster, threshold or placement.
RunReport run_experiment(const ExperimentConfig& config, Dataset r, Dataset s,
                         std::optional<WorkloadSpec> workload = std::nullopt);

// Keys whose count in the dataset meets p * |ds|.
std::set<Key> skewed_keys(const Dataset& ds, double p);

}  // namespace skewjoin
