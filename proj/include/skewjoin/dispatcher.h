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

#include <chrono>
#include <map>

#include "skewjoin/costmodel.h"

namespace skewjoin {

struct Decision {
  Strategy chosen = Strategy::kGraHJ;
  std::map<Strategy, CostBreakdown> costs;
  std::chrono::nanoseconds decision_time{0};
};

// Cheapest total among the given costs. Ties go to the earlier entry of
// kDispatchCandidates (GraHJ, then PRPD, then PnR); strategies outside that
// list rank after it in enum order.
Strategy cheapest(const std::map<Strategy, CostBreakdown>& costs);

// Costs GraHJ, PRPD (local variant) and PnR and picks the cheapest.
Decision dispatch(const SkewClassification& cls, const FrequencyMap& freq_r,
                  const FrequencyMap& freq_s, const ClusterSpec& spec, MergeMode merge_mode,
                  const CostWeights& weights = {});

}  // namespace skewjoin
