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

#include "skewjoin/exec.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace skewjoin {

namespace {

void join_lanes(const std::vector<Tuple>& probe, const std::vector<Tuple>& build,
                bool materialize, NodeOutput& out) {
  if (probe.empty() || build.empty()) return;
  std::vector<Tuple> sorted = build;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Tuple& a, const Tuple& b) { return a.key < b.key; });
  std::unordered_map<Key, std::pair<std::size_t, std::size_t>> table;
  table.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].key == sorted[i].key) ++j;
    table.emplace(sorted[i].key, std::make_pair(i, j));
    i = j;
  }
  for (const Tuple& r : probe) {
    auto it = table.find(r.key);
    if (it == table.end()) continue;
    const auto [lo, hi] = it->second;
    out.count += hi - lo;
    if (materialize) {
      for (std::size_t k = lo; k < hi; ++k) out.pairs.push_back({r.key, r.row, sorted[k].row});
    }
  }
}

}  // namespace

NodeOutput local_join(const NodeInbox& inbox, bool materialize) {
  NodeOutput out;
  join_lanes(inbox.r_hash, inbox.s_hash, materialize, out);
  join_lanes(inbox.r_loc, inbox.s_repl, materialize, out);
  join_lanes(inbox.r_rand, inbox.s_repl, materialize, out);
  join_lanes(inbox.r_repl, inbox.s_rand, materialize, out);
  return out;
}

std::uint64_t JoinResult::total() const {
  return std::accumulate(per_node_counts.begin(), per_node_counts.end(), std::uint64_t{0});
}

MergeOutcome merge(std::vector<NodeOutput> outputs, MergeMode mode, NodeId gateway) {
  MergeOutcome m;
  std::size_t materialized = 0;
  for (const auto& o : outputs) materialized += o.pairs.size();
  m.result.pairs.reserve(materialized);
  for (NodeId i = 0; i < outputs.size(); ++i) {
    m.result.per_node_counts.push_back(outputs[i].count);
    if (mode == MergeMode::kGather && i != gateway) m.traffic += outputs[i].count;
    m.result.pairs.insert(m.result.pairs.end(), outputs[i].pairs.begin(), outputs[i].pairs.end());
    std::vector<JoinPair>().swap(outputs[i].pairs);
  }
  return m;
}

Distribution distribute(std::span<const NodeShare> r_shares, std::span<const NodeShare> s_shares,
                        const RoutePlan& plan, const SkewClassification& cls,
                        const ClusterSpec& spec, std::uint64_t r_tuple_bytes,
                        std::uint64_t s_tuple_bytes) {
  spec.validate();
  if (r_shares.size() != spec.n_nodes || s_shares.size() != spec.n_nodes) {
    throw std::invalid_argument("distribute: share count does not match the cluster size");
  }
  if (!is_paired_correct(plan)) {
    throw std::invalid_argument("distribute: route plan cannot co-locate matching tuples");
  }
  const KeyClassifier class_of(cls);
  Router router(spec, plan.sfr_grid, r_tuple_bytes, s_tuple_bytes);
  Distribution dist;
  dist.inboxes.resize(spec.n_nodes);

  auto route_side = [&](std::span<const NodeShare> shares, Side side) {
    for (NodeId src = 0; src < shares.size(); ++src) {
      for (const Tuple& t : shares[src].tuples) {
        const KeyClass c = class_of(t.key);
        const Action a = side == Side::kR ? plan.r(c) : plan.s(c);
        for (NodeId dst : router.route(t, src, a, side, c)) {
          lane_for(dist.inboxes[dst], side, a).push_back(t);
        }
      }
    }
  };
  route_side(r_shares, Side::kR);
  route_side(s_shares, Side::kS);
  dist.metrics = router.take_metrics();
  return dist;
}

Execution execute(std::span<const NodeShare> r_shares, std::span<const NodeShare> s_shares,
                  const RoutePlan& plan, const SkewClassification& cls, const ClusterSpec& spec,
                  const ExecOptions& options, std::uint64_t r_tuple_bytes,
                  std::uint64_t s_tuple_bytes) {
  Distribution dist = distribute(r_shares, s_shares, plan, cls, spec, r_tuple_bytes, s_tuple_bytes);
  const bool materialize = options.materialize;
  auto outputs = run_nodes(
      std::span<const NodeInbox>(dist.inboxes),
      [materialize](const NodeInbox& inbox, NodeId) { return local_join(inbox, materialize); },
      options.workers);

  Execution exec;
  exec.metrics = std::move(dist.metrics);
  for (NodeId i = 0; i < outputs.size(); ++i) {
    exec.metrics.per_node_processed[i] =
        dist.inboxes[i].r_size() + dist.inboxes[i].s_size() + outputs[i].count;
  }
  exec.max_node_load = *std::max_element(exec.metrics.per_node_processed.begin(),
                                         exec.metrics.per_node_processed.end());
  MergeOutcome merged = merge(std::move(outputs), options.merge_mode, spec.gateway);
  exec.result = std::move(merged.result);
  exec.merge_traffic = merged.traffic;
  return exec;
}

}  // namespace skewjoin
