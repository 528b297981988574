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

#include "skewjoin/datagen.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "skewjoin/random.h"

namespace skewjoin {

namespace {

// Stream ids for mix_seed.
constexpr std::uint64_t kOrderStream = 1;
constexpr std::uint64_t kPayloadStream = 2;

void fill_payload(Dataset& ds, std::uint64_t seed) {
  ds.payload.resize(ds.keys.size() * ds.payload_width);
  Rng rng(mix_seed(seed, kPayloadStream));
  std::size_t i = 0;
  while (i < ds.payload.size()) {
    std::uint64_t word = rng.next();
    for (int b = 0; b < 8 && i < ds.payload.size(); ++b, ++i) {
      ds.payload[i] = static_cast<std::uint8_t>(word >> (8 * b));
    }
  }
}

Dataset finish(std::vector<Key> keys, std::uint32_t payload_width, std::uint64_t seed) {
  Rng rng(mix_seed(seed, kOrderStream));
  rng.shuffle(keys.begin(), keys.end());
  Dataset ds;
  ds.keys = std::move(keys);
  ds.payload_width = payload_width;
  fill_payload(ds, seed);
  return ds;
}

}  // namespace

double generalized_harmonic(std::uint64_t n, double z) {
  // Summed smallest-first to limit rounding error for large n.
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) {
    h += std::pow(static_cast<double>(i), -z);
  }
  return h;
}

std::vector<std::uint64_t> zipf_counts(std::uint64_t n_distinct, double z,
                                       std::uint64_t rows) {
  if (n_distinct == 0) throw std::invalid_argument("zipf: n_distinct must be >= 1");
  if (!(z >= 0.0)) throw std::invalid_argument("zipf: z must be >= 0");

  const double h = generalized_harmonic(n_distinct, z);
  std::vector<std::uint64_t> counts(n_distinct);
  std::vector<double> frac(n_distinct);
  std::uint64_t assigned = 0;
  for (std::uint64_t r = 0; r < n_distinct; ++r) {
    const double quota =
        static_cast<double>(rows) * std::pow(static_cast<double>(r + 1), -z) / h;
    const double fl = std::floor(quota);
    counts[r] = static_cast<std::uint64_t>(fl);
    frac[r] = quota - fl;
    assigned += counts[r];
  }
  // Floating error can push the floor sum a hair over; trim from the tail.
  for (std::uint64_t r = n_distinct; assigned > rows && r-- > 0;) {
    const std::uint64_t take = std::min(counts[r], assigned - rows);
    counts[r] -= take;
    assigned -= take;
  }

  std::vector<std::uint64_t> order(n_distinct);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return frac[a] > frac[b]; });
  std::uint64_t remaining = rows - assigned;
  for (std::uint64_t i = 0; remaining > 0; i = (i + 1) % n_distinct, --remaining) {
    ++counts[order[i]];
  }
  return counts;
}

Dataset gen_zipf(const ZipfSpec& spec) {
  const auto counts = zipf_counts(spec.n_distinct, spec.z, spec.rows);
  std::vector<Key> keys;
  keys.reserve(spec.rows);
  for (std::uint64_t r = 0; r < counts.size(); ++r) {
    keys.insert(keys.end(), counts[r], static_cast<Key>(r + 1));
  }
  return finish(std::move(keys), spec.payload_width, spec.seed);
}

Dataset gen_single_skew(const SingleSkewSpec& spec) {
  if (!(spec.skew_fraction >= 0.0 && spec.skew_fraction <= 1.0)) {
    throw std::invalid_argument("single skew: skew_fraction must lie in [0, 1]");
  }
  if (spec.distinct_rest == 0 && spec.skew_fraction < 1.0) {
    throw std::invalid_argument("single skew: distinct_rest must be >= 1 when skew_fraction < 1");
  }
  const auto skewed = static_cast<std::uint64_t>(
      std::llround(spec.skew_fraction * static_cast<double>(spec.rows)));
  const std::uint64_t rest = spec.rows - skewed;

  std::vector<Key> keys;
  keys.reserve(spec.rows);
  keys.insert(keys.end(), skewed, spec.skew_key);
  if (rest > 0) {
    const std::uint64_t base = rest / spec.distinct_rest;
    const std::uint64_t extra = rest % spec.distinct_rest;
    Key next = 1;
    for (std::uint64_t i = 0; i < spec.distinct_rest; ++i, ++next) {
      if (next == spec.skew_key) ++next;
      keys.insert(keys.end(), base + (i < extra ? 1 : 0), next);
    }
  }
  return finish(std::move(keys), spec.payload_width, spec.seed);
}

PlacementSpec PlacementSpec::parse(const std::string& text, std::uint32_t n_nodes,
                                   std::uint64_t seed) {
  if (text == "balanced") return balanced(n_nodes);
  if (text == "random") return random(seed, n_nodes);
  if (text.rfind("hot:", 0) == 0) {
    const std::string num = text.substr(4);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("placement: bad hot node in '" + text + "'");
    }
    return hot(static_cast<NodeId>(std::stoul(num)), n_nodes);
  }
  throw std::invalid_argument("placement: expected balanced, hot:K or random, got '" + text + "'");
}

std::string PlacementSpec::to_string() const {
  switch (mode) {
    case Mode::kBalanced: return "balanced";
    case Mode::kHot: return "hot:" + std::to_string(hot_node);
    case Mode::kRandom: return "random";
  }
  return "?";
}

std::vector<NodeShare> place(const Dataset& ds, const PlacementSpec& spec,
                             const std::set<Key>& skew_keys) {
  const std::uint32_t n = spec.n_nodes;
  if (n == 0) throw std::invalid_argument("place: n_nodes must be >= 1");
  if (spec.mode == PlacementSpec::Mode::kHot && spec.hot_node >= n) {
    throw std::invalid_argument("place: hot node " + std::to_string(spec.hot_node) +
                                " out of range for " + std::to_string(n) + " nodes");
  }

  std::vector<NodeId> node_of(ds.size());
  switch (spec.mode) {
    case PlacementSpec::Mode::kBalanced: {
      std::map<Key, std::vector<std::size_t>> skewed_rows;
      std::vector<std::size_t> order;
      order.reserve(ds.size());
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (skew_keys.contains(ds.keys[i])) {
          skewed_rows[ds.keys[i]].push_back(i);
        }
      }
      for (const auto& [key, rows] : skewed_rows) {
        order.insert(order.end(), rows.begin(), rows.end());
      }
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!skew_keys.contains(ds.keys[i])) order.push_back(i);
      }
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        node_of[order[pos]] = static_cast<NodeId>(pos % n);
      }
      break;
    }
    case PlacementSpec::Mode::kHot: {
      std::uint64_t next = 0;
      for (std::size_t i = 0; i < ds.size(); ++i) {
        node_of[i] = skew_keys.contains(ds.keys[i]) ? spec.hot_node
                                                    : static_cast<NodeId>(next++ % n);
      }
      break;
    }
    case PlacementSpec::Mode::kRandom: {
      Rng rng(spec.seed);
      for (auto& node : node_of) node = static_cast<NodeId>(rng.below(n));
      break;
    }
  }

  std::vector<NodeShare> shares(n);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    shares[node_of[i]].tuples.push_back(ds.tuple(i));
  }
  return shares;
}

}  // namespace skewjoin
