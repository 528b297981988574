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

#include "skewjoin/stats.h"

#include <stdexcept>

namespace skewjoin {

std::uint64_t FrequencyMap::count(Key x) const {
  auto it = counts.find(x);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t FrequencyMap::node_count(NodeId node, Key x) const {
  auto it = per_node_counts.find(x);
  return it == per_node_counts.end() ? 0 : it->second[node];
}

FrequencyMap build_frequency(std::span<const NodeShare> shares) {
  if (shares.empty()) throw std::invalid_argument("build_frequency: no shares");
  FrequencyMap freq;
  freq.n_nodes = static_cast<std::uint32_t>(shares.size());
  for (NodeId node = 0; node < shares.size(); ++node) {
    for (const Tuple& t : shares[node].tuples) {
      ++freq.counts[t.key];
      auto [it, fresh] = freq.per_node_counts.try_emplace(t.key);
      if (fresh) it->second.assign(freq.n_nodes, 0);
      ++it->second[node];
    }
    freq.table_size += shares[node].tuples.size();
  }
  return freq;
}

double selectivity(const FrequencyMap& freq, Key x) {
  if (freq.table_size == 0) throw std::invalid_argument("selectivity: empty table");
  return static_cast<double>(freq.count(x)) / static_cast<double>(freq.table_size);
}

bool meets_threshold(std::uint64_t count, std::uint64_t table_size, double p) {
  return static_cast<double>(count) >= p * static_cast<double>(table_size) * (1.0 - 1e-9);
}

KeyClass SkewClassification::class_of(Key x) const {
  if (partial_R.contains(x)) return KeyClass::kPartialR;
  if (partial_S.contains(x)) return KeyClass::kPartialS;
  if (complete_left.contains(x)) return KeyClass::kCompleteLeft;
  if (complete_right.contains(x)) return KeyClass::kCompleteRight;
  return KeyClass::kNonSkewed;
}

const std::set<Key>& SkewClassification::members(KeyClass c) const {
  static const std::set<Key> kEmpty;
  switch (c) {
    case KeyClass::kPartialR: return partial_R;
    case KeyClass::kPartialS: return partial_S;
    case KeyClass::kCompleteLeft: return complete_left;
    case KeyClass::kCompleteRight: return complete_right;
    case KeyClass::kNonSkewed: break;
  }
  return kEmpty;
}

std::set<Key> SkewClassification::skewed() const {
  std::set<Key> all = rho_R;
  all.insert(rho_S.begin(), rho_S.end());
  return all;
}

SkewClassification classify(const FrequencyMap& freq_r, const FrequencyMap& freq_s, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("classify: p must lie in (0, 1]");
  SkewClassification cls;
  cls.threshold_p = p;
  for (const auto& [x, q] : freq_r.counts) {
    if (meets_threshold(q, freq_r.table_size, p)) cls.rho_R.insert(x);
  }
  for (const auto& [x, q] : freq_s.counts) {
    if (meets_threshold(q, freq_s.table_size, p)) cls.rho_S.insert(x);
  }
  for (Key x : cls.rho_R) {
    if (!cls.rho_S.contains(x)) {
      cls.partial_R.insert(x);
    } else if (freq_r.count(x) > freq_s.count(x)) {
      cls.complete_left.insert(x);
    } else {
      cls.complete_right.insert(x);
    }
  }
  for (Key x : cls.rho_S) {
    if (!cls.rho_R.contains(x)) cls.partial_S.insert(x);
  }
  return cls;
}

KeyClassifier::KeyClassifier(const SkewClassification& cls) {
  for (KeyClass c : kAllKeyClasses) {
    for (Key x : cls.members(c)) classes_.emplace(x, c);
  }
}

}  // namespace skewjoin
