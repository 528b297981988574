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
#include <span>
#include <vector>

#include "skewjoin/cluster.h"
#include "skewjoin/datagen.h"
#include "skewjoin/stats.h"
#include "skewjoin/strategies.h"

namespace skewjoin {

// One output row: the R row and S row that matched on key.
struct JoinPair {
  Key key = 0;
  RowId r = 0;
  RowId s = 0;

  friend auto operator<=>(const JoinPair&, const JoinPair&) = default;
};

struct NodeOutput {
  std::uint64_t count = 0;
  std::vector<JoinPair> pairs;  // empty unless materialized
};

// Joins the four lane pairs of one node:
//   r_hash x s_hash, r_loc x s_repl, r_rand x s_repl, r_repl x s_rand.
// The S lane is the build side, the R lane probes. Pairs come out component by
// component, in probe order.
NodeOutput local_join(const NodeInbox& inbox, bool materialize = true);

enum class MergeMode : std::uint8_t { kGather, kLocalAggregate };

struct JoinResult {
  std::vector<JoinPair> pairs;
  std::vector<std::uint64_t> per_node_counts;

  std::uint64_t total() const;
};

struct MergeOutcome {
  JoinResult result;
  // Result rows shipped to the gateway; 0 for local aggregation.
  std::uint64_t traffic = 0;
};

MergeOutcome merge(std::vector<NodeOutput> outputs, MergeMode mode, NodeId gateway);

struct Distribution {
  std::vector<NodeInbox> inboxes;
  NetMetrics metrics;
};

// Routes every tuple of every share through the plan. Single-threaded and
// deterministic: shares are visited node by node, R before S.
Distribution distribute(std::span<const NodeShare> r_shares, std::span<const NodeShare> s_shares,
                        const RoutePlan& plan, const SkewClassification& cls,
                        const ClusterSpec& spec, std::uint64_t r_tuple_bytes = 16,
                        std::uint64_t s_tuple_bytes = 16);

struct ExecOptions {
  MergeMode merge_mode = MergeMode::kLocalAggregate;
  bool materialize = true;
  unsigned workers = 1;
};

struct Execution {
  NetMetrics metrics;  // per_node_processed = |R^i| + |S^i| + |R^i join S^i|
  JoinResult result;
  std::uint64_t merge_traffic = 0;
  std::uint64_t max_node_load = 0;
};

Execution execute(std::span<const NodeShare> r_shares, std::span<const NodeShare> s_shares,
                  const RoutePlan& plan, const SkewClassification& cls, const ClusterSpec& spec,
                  const ExecOptions& options, std::uint64_t r_tuple_bytes = 16,
                  std::uint64_t s_tuple_bytes = 16);

}  // namespace skewjoin
