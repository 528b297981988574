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

#include "skewjoin/costmodel.h"

#include <algorithm>
#include <stdexcept>

namespace skewjoin {

namespace {

double d(std::uint64_t v) { return static_cast<double>(v); }

void check_inputs(const FrequencyMap& freq_r, const FrequencyMap& freq_s,
                  const ClusterSpec& spec) {
  spec.validate();
  if (freq_r.n_nodes != spec.n_nodes || freq_s.n_nodes != spec.n_nodes) {
    throw std::invalid_argument("estimate: frequency maps were built for a different cluster size");
  }
}

}  // namespace

double redist_cost_hash(std::uint64_t q_r, std::uint64_t q_s, std::uint32_t n) {
  const double q = d(q_r) + d(q_s);
  return q - q / n;
}

double redist_cost_local(Side, std::uint64_t q_other, std::uint32_t n) {
  return d(q_other) * (n - 1.0);
}

double redist_cost_random(Side side, std::uint64_t q_r, std::uint64_t q_s, std::uint32_t n) {
  const double self = d(side == Side::kR ? q_r : q_s);
  const double other = d(side == Side::kR ? q_s : q_r);
  return self * (n - 1.0) / n + other * (n - 1.0);
}

double join_cost_hash(std::uint64_t q_r, std::uint64_t q_s) {
  return d(q_r) + d(q_s) + d(q_r) * d(q_s);
}

double join_cost_local(Side, std::uint64_t q_i_self, std::uint64_t q_other) {
  return d(q_i_self) + d(q_other) + d(q_i_self) * d(q_other);
}

double join_cost_random(Side side, std::uint64_t q_r, std::uint64_t q_s, std::uint32_t n) {
  const double share = d(side == Side::kR ? q_r : q_s) / n;
  const double other = d(side == Side::kR ? q_s : q_r);
  return share + other + share * other;
}

CostBaseline non_skew_baseline(const SkewClassification& cls, const FrequencyMap& freq_r,
                               const FrequencyMap& freq_s, const ClusterSpec& spec) {
  check_inputs(freq_r, freq_s, spec);
  CostBaseline base;
  base.node_load.assign(spec.n_nodes, 0.0);
  base.node_results.assign(spec.n_nodes, 0.0);
  auto skew_r = cls.rho_R.begin();
  auto skew_s = cls.rho_S.begin();
  auto add = [&](Key x, std::uint64_t q_r, std::uint64_t q_s) {
    while (skew_r != cls.rho_R.end() && *skew_r < x) ++skew_r;
    while (skew_s != cls.rho_S.end() && *skew_s < x) ++skew_s;
    if ((skew_r != cls.rho_R.end() && *skew_r == x) ||
        (skew_s != cls.rho_S.end() && *skew_s == x)) {
      return;
    }
    const NodeId h = spec.hash(x);
    base.re += redist_cost_hash(q_r, q_s, spec.n_nodes);
    base.node_load[h] += join_cost_hash(q_r, q_s);
    base.node_results[h] += d(q_r) * d(q_s);
  };
  // Both maps are key-ordered: one merged pass, no lookups.
  auto r = freq_r.counts.begin();
  auto s = freq_s.counts.begin();
  while (r != freq_r.counts.end() || s != freq_s.counts.end()) {
    if (s == freq_s.counts.end() || (r != freq_r.counts.end() && r->first < s->first)) {
      add(r->first, r->second, 0);
      ++r;
    } else if (r == freq_r.counts.end() || s->first < r->first) {
      add(s->first, 0, s->second);
      ++s;
    } else {
      add(r->first, r->second, s->second);
      ++r;
      ++s;
    }
  }
  return base;
}

std::vector<SkewedValue> gather_skewed(const SkewClassification& cls, const FrequencyMap& freq_r,
                                       const FrequencyMap& freq_s) {
  auto nodes = [](const FrequencyMap& f, Key x) -> std::span<const std::uint64_t> {
    auto it = f.per_node_counts.find(x);
    if (it == f.per_node_counts.end()) return {};
    return it->second;
  };
  std::vector<SkewedValue> out;
  for (KeyClass c : kAllKeyClasses) {
    for (Key x : cls.members(c)) {
      SkewedValue v{x, c, 0, 0, nodes(freq_r, x), nodes(freq_s, x)};
      for (std::uint64_t q : v.r_nodes) v.q_r += q;
      for (std::uint64_t q : v.s_nodes) v.q_s += q;
      out.push_back(v);
    }
  }
  return out;
}

CostBreakdown estimate(Strategy strategy, const SkewClassification& cls,
                       const FrequencyMap& freq_r, const FrequencyMap& freq_s,
                       const ClusterSpec& spec, const CostBaseline& baseline, MergeMode merge_mode,
                       const CostWeights& weights) {
  check_inputs(freq_r, freq_s, spec);
  const auto values = gather_skewed(cls, freq_r, freq_s);
  return estimate(strategy, cls, values, spec, baseline, merge_mode, weights);
}

CostBreakdown estimate(Strategy strategy, const SkewClassification& cls,
                       std::span<const SkewedValue> values, const ClusterSpec& spec,
                       const CostBaseline& baseline, MergeMode merge_mode,
                       const CostWeights& weights) {
  spec.validate();
  const std::uint32_t n = spec.n_nodes;
  if (baseline.node_load.size() != n) {
    throw std::invalid_argument("estimate: baseline was built for a different cluster size");
  }
  const RoutePlan plan = plan_for(strategy, cls, n);

  double re = baseline.re;
  std::vector<double> load = baseline.node_load;
  std::vector<double> results = baseline.node_results;
  auto at = [](std::span<const std::uint64_t> nodes, NodeId i) -> std::uint64_t {
    return nodes.empty() ? 0 : nodes[i];
  };

  for (const SkewedValue& v : values) {
    const Action a_r = plan.r(v.cls);
    const Action a_s = plan.s(v.cls);
    const std::uint64_t q_r = v.q_r;
    const std::uint64_t q_s = v.q_s;
    if (a_r == Action::kHash) {
      const NodeId h = spec.hash(v.x);
      re += redist_cost_hash(q_r, q_s, n);
      load[h] += join_cost_hash(q_r, q_s);
      results[h] += d(q_r) * d(q_s);
    } else if (a_r == Action::kLocal) {
      re += redist_cost_local(Side::kR, q_s, n);
      for (NodeId i = 0; i < n; ++i) {
        const std::uint64_t q_ri = at(v.r_nodes, i);
        load[i] += join_cost_local(Side::kR, q_ri, q_s);
        results[i] += d(q_ri) * d(q_s);
      }
    } else if (a_s == Action::kLocal) {
      re += redist_cost_local(Side::kS, q_r, n);
      for (NodeId i = 0; i < n; ++i) {
        const std::uint64_t q_si = at(v.s_nodes, i);
        load[i] += join_cost_local(Side::kS, q_si, q_r);
        results[i] += d(q_r) * d(q_si);
      }
    } else if (a_r == Action::kRandomRR || a_s == Action::kRandomRR) {
      const Side side = a_r == Action::kRandomRR ? Side::kR : Side::kS;
      re += redist_cost_random(side, q_r, q_s, n);
      const double work = join_cost_random(side, q_r, q_s, n);
      const double out = d(q_r) * d(q_s) / n;
      for (NodeId i = 0; i < n; ++i) {
        load[i] += work;
        results[i] += out;
      }
    } else if (a_r == Action::kSfrRow) {
      // Each R tuple lands on one grid row (cols copies), each S tuple on
      // one column (rows copies); a node sees 1/rows of R and 1/cols of S.
      // Rows are dealt evenly, so 1/rows of the R tuples keep one copy at
      // their source, and likewise 1/cols of the S tuples.
      const SfrGrid grid = *plan.sfr_grid;
      re += d(q_r) * (grid.cols - 1.0 / grid.rows) + d(q_s) * (grid.rows - 1.0 / grid.cols);
      const double r_share = d(q_r) / grid.rows;
      const double s_share = d(q_s) / grid.cols;
      for (NodeId i = 0; i < n; ++i) {
        load[i] += r_share + s_share + r_share * s_share;
        results[i] += r_share * s_share;
      }
    } else {
      throw std::logic_error("estimate: unhandled action pair");
    }
  }

  CostBreakdown cost;
  cost.re = weights.re * re;
  cost.comp = weights.comp * *std::max_element(load.begin(), load.end());
  if (merge_mode == MergeMode::kGather) {
    double summ = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (i != spec.gateway) summ += results[i];
    }
    cost.summ = weights.summ * summ;
  }
  cost.total = cost.re + cost.comp + cost.summ;
  return cost;
}

CostBreakdown estimate(Strategy strategy, const SkewClassification& cls,
                       const FrequencyMap& freq_r, const FrequencyMap& freq_s,
                       const ClusterSpec& spec, MergeMode merge_mode,
                       const CostWeights& weights) {
  const CostBaseline baseline = non_skew_baseline(cls, freq_r, freq_s, spec);
  return estimate(strategy, cls, freq_r, freq_s, spec, baseline, merge_mode, weights);
}

}  // namespace skewjoin
