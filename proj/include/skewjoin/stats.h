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
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "skewjoin/types.h"

namespace skewjoin {

// Exact per-value frequencies of one table, overall and per node.
struct FrequencyMap {
  std::uint64_t table_size = 0;
  std::uint32_t n_nodes = 0;
  std::map<Key, std::uint64_t> counts;
  std::unordered_map<Key, std::vector<std::uint64_t>> per_node_counts;

  std::uint64_t count(Key x) const;
  std::uint64_t node_count(NodeId node, Key x) const;
};

FrequencyMap build_frequency(std::span<const NodeShare> shares);

// Fraction of the table carrying x. Throws std::invalid_argument on an empty
// table.
double selectivity(const FrequencyMap& freq, Key x);

// True iff count >= p * table_size. p is usually a short decimal such as 0.05
// whose binary value is slightly off, so the comparison carries a 1e-9
// relative slack to keep count == p * size on the skewed side.
bool meets_threshold(std::uint64_t count, std::uint64_t table_size, double p);

struct SkewClassification {
  double threshold_p = 0.0;
  std::set<Key> rho_R;
  std::set<Key> rho_S;
  std::set<Key> partial_R;       // rho_R \ rho_S
  std::set<Key> partial_S;       // rho_S \ rho_R
  std::set<Key> complete_left;   // complete skew, Q(R,x) > Q(S,x)
  std::set<Key> complete_right;  // complete skew, Q(R,x) <= Q(S,x)

  KeyClass class_of(Key x) const;
  const std::set<Key>& members(KeyClass c) const;
  // rho_R union rho_S, in key order.
  std::set<Key> skewed() const;
};

// Pure function of its inputs. 0 < p <= 1, else std::invalid_argument.
SkewClassification classify(const FrequencyMap& freq_r, const FrequencyMap& freq_s, double p);

// Hash-map lookup from key to class, for per-tuple routing.
class KeyClassifier {
 public:
  explicit KeyClassifier(const SkewClassification& cls);
  KeyClass operator()(Key x) const {
    auto it = classes_.find(x);
    return it == classes_.end() ? KeyClass::kNonSkewed : it->second;
  }

 private:
  std::unordered_map<Key, KeyClass> classes_;
};

}  // namespace skewjoin
