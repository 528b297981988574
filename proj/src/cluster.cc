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

#include "skewjoin/cluster.h"

#include <stdexcept>
#include <string>

namespace skewjoin {

void ClusterSpec::validate() const {
  if (n_nodes == 0) throw std::invalid_argument("cluster: need at least one node");
  if (gateway >= n_nodes) {
    throw std::invalid_argument("cluster: gateway " + std::to_string(gateway) +
                                " out of range for " + std::to_string(n_nodes) + " nodes");
  }
}

SfrGrid SfrGrid::for_nodes(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("sfr grid: need at least one node");
  std::uint32_t rows = 1;
  for (std::uint32_t d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) rows = d;
  }
  return {rows, n / rows};
}

std::vector<Tuple>& lane_for(NodeInbox& inbox, Side side, Action action) {
  if (side == Side::kR) {
    switch (action) {
      case Action::kHash: return inbox.r_hash;
      case Action::kLocal: return inbox.r_loc;
      case Action::kRandomRR:
      case Action::kSfrRow: return inbox.r_rand;
      case Action::kBroadcast: return inbox.r_repl;
      case Action::kSfrCol: break;
    }
  } else {
    switch (action) {
      case Action::kHash: return inbox.s_hash;
      case Action::kLocal:
      case Action::kRandomRR: return inbox.s_rand;
      case Action::kBroadcast:
      case Action::kSfrCol: return inbox.s_repl;
      case Action::kSfrRow: break;
    }
  }
  throw std::invalid_argument(std::string("no inbox lane for ") +
                              (side == Side::kR ? "R" : "S") + " action " +
                              std::string(to_string(action)));
}

Router::Router(const ClusterSpec& spec, std::optional<SfrGrid> grid,
               std::uint64_t r_tuple_bytes, std::uint64_t s_tuple_bytes)
    : spec_(spec),
      grid_(grid),
      tuple_bytes_{r_tuple_bytes, s_tuple_bytes},
      rr_counters_(static_cast<std::size_t>(spec.n_nodes) * 2 * kNumKeyClasses, 0) {
  spec_.validate();
  if (grid_ && grid_->rows * grid_->cols != spec_.n_nodes) {
    throw std::invalid_argument("router: sfr grid does not cover the cluster");
  }
  metrics_.per_node_received.assign(spec_.n_nodes, 0);
  metrics_.per_node_processed.assign(spec_.n_nodes, 0);
  dest_.reserve(spec_.n_nodes);
}

NodeId Router::next_rr(NodeId source, Side side, KeyClass cls, std::uint32_t modulus) {
  const std::size_t slot =
      (static_cast<std::size_t>(source) * 2 + static_cast<std::size_t>(side)) * kNumKeyClasses +
      index_of(cls);
  return static_cast<NodeId>((source + rr_counters_[slot]++) % modulus);
}

std::span<const NodeId> Router::route(const Tuple& t, NodeId source, Action action, Side side,
                                      KeyClass cls) {
  dest_.clear();
  const std::uint32_t n = spec_.n_nodes;
  switch (action) {
    case Action::kHash:
      dest_.push_back(spec_.hash(t.key));
      break;
    case Action::kLocal:
      dest_.push_back(source);
      break;
    case Action::kRandomRR:
      dest_.push_back(next_rr(source, side, cls, n));
      break;
    case Action::kBroadcast:
      for (NodeId i = 0; i < n; ++i) dest_.push_back(i);
      break;
    case Action::kSfrRow: {
      if (!grid_) throw std::logic_error("router: sfr_row without a grid");
      const NodeId row = next_rr(source, side, cls, grid_->rows);
      for (NodeId c = 0; c < grid_->cols; ++c) dest_.push_back(row * grid_->cols + c);
      break;
    }
    case Action::kSfrCol: {
      if (!grid_) throw std::logic_error("router: sfr_col without a grid");
      const NodeId col = next_rr(source, side, cls, grid_->cols);
      for (NodeId r = 0; r < grid_->rows; ++r) dest_.push_back(r * grid_->cols + col);
      break;
    }
  }
  const std::uint64_t bytes = tuple_bytes_[static_cast<std::size_t>(side)];
  for (NodeId d : dest_) {
    ++metrics_.per_node_received[d];
    if (d != source) {
      ++metrics_.cross_node_tuples;
      metrics_.cross_node_bytes += bytes;
      if (cls != KeyClass::kNonSkewed) ++metrics_.skewed_cross_node_tuples;
    }
  }
  return dest_;
}

}  // namespace skewjoin
