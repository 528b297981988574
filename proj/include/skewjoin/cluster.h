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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

#include "skewjoin/types.h"

namespace skewjoin {

struct ClusterSpec {
  std::uint32_t n_nodes = 1;
  NodeId gateway = 0;
  // h(x) = (x + hash_offset) mod N. Offset 1 on three nodes gives the
  // h(x) = (x + 1) mod 3 example function.
  std::int64_t hash_offset = 0;

  NodeId hash(Key x) const {
    const auto n = static_cast<std::int64_t>(n_nodes);
    // Split the addition so extreme keys do not overflow.
    std::int64_t h = (x % n + hash_offset % n) % n;
    return static_cast<NodeId>(h < 0 ? h + n : h);
  }

  // Throws std::invalid_argument unless N >= 1 and gateway < N.
  void validate() const;
};

// rows x cols arrangement of the nodes for fragment-replicate routing; node
// id = row * cols + col. rows is the largest divisor of N not above sqrt(N).
struct SfrGrid {
  std::uint32_t rows = 1;
  std::uint32_t cols = 1;

  static SfrGrid for_nodes(std::uint32_t n);
  friend bool operator==(const SfrGrid&, const SfrGrid&) = default;
};

// What one node holds after redistribution, one lane per routing outcome.
// Lanes are joined pairwise and never merged (see local_join).
struct NodeInbox {
  std::vector<Tuple> r_hash, r_loc, r_rand, r_repl;
  std::vector<Tuple> s_hash, s_rand, s_repl;

  std::size_t r_size() const {
    return r_hash.size() + r_loc.size() + r_rand.size() + r_repl.size();
  }
  std::size_t s_size() const { return s_hash.size() + s_rand.size() + s_repl.size(); }

  friend bool operator==(const NodeInbox&, const NodeInbox&) = default;
};

// Lane a tuple lands in, given its table and action.
//   R: hash->r_hash, local->r_loc, random_rr/sfr_row->r_rand, broadcast->r_repl
//   S: hash->s_hash, local/random_rr->s_rand, broadcast/sfr_col->s_repl
std::vector<Tuple>& lane_for(NodeInbox& inbox, Side side, Action action);

struct NetMetrics {
  std::uint64_t cross_node_tuples = 0;
  std::uint64_t cross_node_bytes = 0;
  // Cross-node tuples whose key is skewed in R or S.
  std::uint64_t skewed_cross_node_tuples = 0;
  std::vector<std::uint64_t> per_node_received;
  std::vector<std::uint64_t> per_node_processed;

  friend bool operator==(const NetMetrics&, const NetMetrics&) = default;
};

// Maps (tuple, source, action) to destination nodes and accounts traffic.
//
// random_rr and sfr_row/sfr_col draw from a round-robin counter kept per
// (source, table, key class). The counter of source s starts at s, so sources
// holding equal counts fill every destination equally; in general per-node
// totals differ by at most the number of sources.
class Router {
 public:
  Router(const ClusterSpec& spec, std::optional<SfrGrid> grid,
         std::uint64_t r_tuple_bytes, std::uint64_t s_tuple_bytes);

  // Destinations stay valid until the next call.
  std::span<const NodeId> route(const Tuple& t, NodeId source, Action action, Side side,
                                KeyClass cls);

  const NetMetrics& metrics() const { return metrics_; }
  NetMetrics take_metrics() { return std::move(metrics_); }

 private:
  NodeId next_rr(NodeId source, Side side, KeyClass cls, std::uint32_t modulus);

  ClusterSpec spec_;
  std::optional<SfrGrid> grid_;
  std::uint64_t tuple_bytes_[2];
  std::vector<std::uint64_t> rr_counters_;
  std::vector<NodeId> dest_;
  NetMetrics metrics_;
};

// Applies fn(inbox, node) to every node on up to `workers` threads. Each node
// is handled by exactly one thread and outputs are stored by node index, so
// the result does not depend on the worker count.
template <class Fn>
auto run_nodes(std::span<const NodeInbox> inboxes, Fn&& fn, unsigned workers = 1)
    -> std::vector<std::invoke_result_t<Fn&, const NodeInbox&, NodeId>> {
  using Out = std::invoke_result_t<Fn&, const NodeInbox&, NodeId>;
  std::vector<Out> outputs(inboxes.size());
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(inboxes.size(), 1)));
  if (workers == 1) {
    for (NodeId i = 0; i < inboxes.size(); ++i) outputs[i] = fn(inboxes[i], i);
    return outputs;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < inboxes.size(); i = next++) {
          outputs[i] = fn(inboxes[i], static_cast<NodeId>(i));
        }
      });
    }
  }
  return outputs;
}

}  // namespace skewjoin
