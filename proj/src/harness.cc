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

#include "skewjoin/harness.h"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <unordered_map>

#include "skewjoin/random.h"

namespace skewjoin {

std::pair<Dataset, Dataset> make_workload(const WorkloadSpec& spec) {
  try {
    if (spec.kind == WorkloadSpec::Kind::kZipf) {
      return {gen_zipf({spec.n_distinct, spec.r_z, spec.r_rows, mix_seed(spec.seed, 0),
                        spec.payload_width}),
              gen_zipf({spec.n_distinct, spec.s_z, spec.s_rows, mix_seed(spec.seed, 1),
                        spec.payload_width})};
    }
    return {gen_single_skew({spec.skew_key, spec.r_skew, spec.r_rows, spec.distinct_rest,
                             mix_seed(spec.seed, 0), spec.payload_width}),
            gen_single_skew({spec.skew_key, spec.s_skew, spec.s_rows, spec.distinct_rest,
                             mix_seed(spec.seed, 1), spec.payload_width})};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string strategy_label(const std::optional<Strategy>& s) {
  return s ? std::string(to_string(*s)) : "auto";
}

std::optional<Strategy> parse_strategy_label(const std::string& name) {
  if (name == "auto") return std::nullopt;
  if (auto s = parse_strategy(name)) return s;
  throw ConfigError("unknown strategy '" + name +
                    "' (expected grahj, prpd, prpd-u, prpd-sfr, pnr or auto)");
}

std::string to_string(MergeMode m) {
  return m == MergeMode::kGather ? "gather" : "local";
}

MergeMode parse_merge_mode(const std::string& name) {
  if (name == "gather") return MergeMode::kGather;
  if (name == "local") return MergeMode::kLocalAggregate;
  throw ConfigError("unknown merge mode '" + name + "' (expected gather or local)");
}

JoinResult oracle_join(const Dataset& r, const Dataset& s) {
  JoinResult out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (r.keys[i] == s.keys[j]) {
        out.pairs.push_back({r.keys[i], static_cast<RowId>(i), static_cast<RowId>(j)});
      }
    }
  }
  out.per_node_counts = {out.pairs.size()};
  return out;
}

bool same_pairs(std::vector<JoinPair> a, std::vector<JoinPair> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::set<Key> skewed_keys(const Dataset& ds, double p) {
  std::unordered_map<Key, std::uint64_t> counts;
  for (Key k : ds.keys) ++counts[k];
  std::set<Key> out;
  for (const auto& [k, q] : counts) {
    if (meets_threshold(q, ds.size(), p)) out.insert(k);
  }
  return out;
}

RunReport run_experiment(const ExperimentConfig& config, Dataset r, Dataset s,
                         std::optional<WorkloadSpec> workload) {
  try {
    config.cluster.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(config.threshold > 0.0 && config.threshold <= 1.0)) {
    throw ConfigError("threshold must lie in (0, 1]");
  }
  if (config.repeat == 0) throw ConfigError("repeat must be >= 1");

  RunReport report;
  report.config = config;
  report.workload = std::move(workload);
  if (r.size() < s.size()) {
    std::cerr << "warning: |R| = " << r.size() << " < |S| = " << s.size()
              << "; swapping probe and build roles\n";
    std::swap(r, s);
    report.swapped = true;
  }
  report.r_rows = r.size();
  report.s_rows = s.size();

  const std::uint32_t n = config.cluster.n_nodes;
  std::set<Key> skew = skewed_keys(r, config.threshold);
  skew.merge(skewed_keys(s, config.threshold));

  std::optional<JoinResult> oracle;
  if (config.verify && config.execute) {
    oracle = oracle_join(r, s);
    report.verified = true;
  }

  RunMetrics& m = report.metrics;
  m.per_node_processed.assign(n, 0.0);
  for (unsigned rep = 0; rep < config.repeat; ++rep) {
    std::vector<NodeShare> r_shares, s_shares;
    try {
      const auto placement = PlacementSpec::parse(config.placement, n, config.placement_seed + rep);
      r_shares = place(r, placement, skew);
      s_shares = place(s, placement, skew);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const FrequencyMap freq_r = build_frequency(r_shares);
    const FrequencyMap freq_s = build_frequency(s_shares);
    const SkewClassification cls = classify(freq_r, freq_s, config.threshold);

    Strategy strategy;
    if (config.strategy) {
      strategy = *config.strategy;
    } else {
      Decision d = dispatch(cls, freq_r, freq_s, config.cluster, config.merge_mode, config.weights);
      if (!config.timing) d.decision_time = {};
      strategy = d.chosen;
      if (rep == 0) report.decision = std::move(d);
    }
    report.executed_per_run.push_back(strategy);

    if (rep == 0) {
      report.executed = strategy;
      report.skew = {cls.rho_R.size(),         cls.rho_S.size(),
                     cls.partial_R.size(),     cls.partial_S.size(),
                     cls.complete_left.size(), cls.complete_right.size()};
      const CostBaseline baseline = non_skew_baseline(cls, freq_r, freq_s, config.cluster);
      for (Strategy st : kAllStrategies) {
        report.cost_model[st] = estimate(st, cls, freq_r, freq_s, config.cluster, baseline,
                                         config.merge_mode, config.weights);
      }
    }

    if (!config.execute) continue;

    const RoutePlan plan = plan_for(strategy, cls, n);
    const ExecOptions options{config.merge_mode, config.verify, config.workers};
    const auto start = std::chrono::steady_clock::now();
    Execution exec = execute(r_shares, s_shares, plan, cls, config.cluster, options,
                             r.tuple_bytes(), s.tuple_bytes());
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    m.result_count = exec.result.total();
    m.cross_node_tuples += exec.metrics.cross_node_tuples;
    m.cross_node_bytes += exec.metrics.cross_node_bytes;
    m.skewed_cross_node_tuples += exec.metrics.skewed_cross_node_tuples;
    for (NodeId i = 0; i < n; ++i) m.per_node_processed[i] += exec.metrics.per_node_processed[i];
    m.max_node_load += exec.max_node_load;
    m.merge_traffic += exec.merge_traffic;
    if (config.timing && wall_ms > 0.0) {
      m.wall_ms += wall_ms;
      m.throughput_tuples_per_s += static_cast<double>(r.size() + s.size()) / (wall_ms / 1e3);
    }
    if (oracle && !same_pairs(std::move(exec.result.pairs), oracle->pairs)) {
      report.verified = false;
    }
  }

  const double runs = config.repeat;
  m.cross_node_tuples /= runs;
  m.cross_node_bytes /= runs;
  m.skewed_cross_node_tuples /= runs;
  for (double& v : m.per_node_processed) v /= runs;
  m.max_node_load /= runs;
  m.merge_traffic /= runs;
  m.wall_ms /= runs;
  m.throughput_tuples_per_s /= runs;
  return report;
}

}  // namespace skewjoin
