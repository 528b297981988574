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

#include "skewjoin/dispatcher.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace skewjoin {

namespace {

int rank_of(Strategy s) {
  auto it = std::find(kDispatchCandidates.begin(), kDispatchCandidates.end(), s);
  if (it != kDispatchCandidates.end()) return static_cast<int>(it - kDispatchCandidates.begin());
  return static_cast<int>(kDispatchCandidates.size()) + static_cast<int>(s);
}

}  // namespace

Strategy cheapest(const std::map<Strategy, CostBreakdown>& costs) {
  if (costs.empty()) throw std::invalid_argument("cheapest: no candidate costs");
  std::vector<Strategy> order;
  for (const auto& [s, _] : costs) order.push_back(s);
  std::sort(order.begin(), order.end(),
            [](Strategy a, Strategy b) { return rank_of(a) < rank_of(b); });
  Strategy best = order.front();
  double min_cost = std::numeric_limits<double>::infinity();
  for (Strategy s : order) {
    const double total = costs.at(s).total;
    if (total < min_cost) {
      best = s;
      min_cost = total;
    }
  }
  return best;
}

Decision dispatch(const SkewClassification& cls, const FrequencyMap& freq_r,
                  const FrequencyMap& freq_s, const ClusterSpec& spec, MergeMode merge_mode,
                  const CostWeights& weights) {
  const auto start = std::chrono::steady_clock::now();
  Decision decision;
  const CostBaseline baseline = non_skew_baseline(cls, freq_r, freq_s, spec);
  const std::vector<SkewedValue> values = gather_skewed(cls, freq_r, freq_s);
  for (Strategy s : kDispatchCandidates) {
    decision.costs[s] = estimate(s, cls, values, spec, baseline, merge_mode, weights);
  }
  decision.chosen = cheapest(decision.costs);
  decision.decision_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return decision;
}

}  // namespace skewjoin
