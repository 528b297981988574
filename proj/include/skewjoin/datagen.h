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
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skewjoin/types.h"

namespace skewjoin {

// A generated or loaded table. Keys and payloads are stored column-wise;
// payload bytes never influence routing.
struct Dataset {
  std::vector<Key> keys;
  std::vector<std::uint8_t> payload;  // keys.size() * payload_width bytes
  std::uint32_t payload_width = 0;

  std::size_t size() const { return keys.size(); }
  Tuple tuple(std::size_t i) const { return {keys[i], static_cast<RowId>(i)}; }
  std::span<const std::uint8_t> payload_of(std::size_t i) const {
    return {payload.data() + i * payload_width, payload_width};
  }
  // Bytes a tuple occupies on the wire: the 64-bit key plus its payload.
  std::uint64_t tuple_bytes() const { return payload_width + sizeof(Key); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct ZipfSpec {
  std::uint64_t n_distinct = 1;
  double z = 0.0;
  std::uint64_t rows = 0;
  std::uint64_t seed = 0;
  std::uint32_t payload_width = 8;
};

struct SingleSkewSpec {
  Key skew_key = 0;
  double skew_fraction = 0.0;
  std::uint64_t rows = 0;
  std::uint64_t distinct_rest = 1;
  std::uint64_t seed = 0;
  std::uint32_t payload_width = 8;
};

struct PlacementSpec {
  enum class Mode { kBalanced, kHot, kRandom };

  Mode mode = Mode::kBalanced;
  std::uint32_t n_nodes = 1;
  NodeId hot_node = 0;     // kHot only
  std::uint64_t seed = 0;  // kRandom only

  static PlacementSpec balanced(std::uint32_t n) { return {Mode::kBalanced, n, 0, 0}; }
  static PlacementSpec hot(NodeId k, std::uint32_t n) { return {Mode::kHot, n, k, 0}; }
  static PlacementSpec random(std::uint64_t seed, std::uint32_t n) {
    return {Mode::kRandom, n, 0, seed};
  }

  // "balanced", "hot:K" or "random"; throws std::invalid_argument.
  static PlacementSpec parse(const std::string& text, std::uint32_t n_nodes,
                             std::uint64_t seed);
  std::string to_string() const;
};

// H(n, z) = sum_{i=1..n} i^-z.
double generalized_harmonic(std::uint64_t n, double z);

// Per-rank tuple counts: largest-remainder rounding of rows * i^-z / H(n, z).
// Non-increasing in rank, sums exactly to rows.
std::vector<std::uint64_t> zipf_counts(std::uint64_t n_distinct, double z,
                                       std::uint64_t rows);

// Rank r (1-based) receives key r. The seed only shuffles row order and fills
// payloads; counts are exact.
Dataset gen_zipf(const ZipfSpec& spec);

// round(skew_fraction * rows) tuples carry skew_key, the rest are spread evenly
// over distinct_rest keys taken from 1, 2, ... skipping skew_key.
Dataset gen_single_skew(const SingleSkewSpec& spec);

// Splits a dataset into per-node shares. Within a share rows keep dataset
// order.
//  balanced: one round-robin counter over all rows, dealing the rows of each
//            skew key first (grouped by key) so every skew key is spread evenly
//            too; per-node totals differ by at most 1.
//  hot:      rows whose key is in skew_keys all go to hot_node; the others are
//            dealt round-robin.
//  random:   each row goes to a node drawn uniformly from the placement seed.
std::vector<NodeShare> place(const Dataset& ds, const PlacementSpec& spec,
                             const std::set<Key>& skew_keys = {});

}  // namespace skewjoin
