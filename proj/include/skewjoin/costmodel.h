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
#include "skewjoin/exec.h"
#include "skewjoin/stats.h"
#include "skewjoin/strategies.h"

namespace skewjoin {

// Per-phase cost in tuple units. total = re + comp + summ.
struct CostBreakdown {
  double re = 0.0;    // tuples crossing the network during redistribution
  double comp = 0.0;  // max over nodes of build + probe + materialized output
  double summ = 0.0;  // result rows shipped to the gateway
  double total = 0.0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// Optional scaling of each phase before summing. All 1 by default.
struct CostWeights {
  double re = 1.0;
  double comp = 1.0;
  double summ = 1.0;
};

// Network volume for value x.
//   hash:   (Q_R + Q_S)(N - 1)/N
//   local:  the other table is broadcast, Q_other (N - 1)
//   random: own table scattered plus the other broadcast,
//           Q_self (N - 1)/N + Q_other (N - 1)
double redist_cost_hash(std::uint64_t q_r, std::uint64_t q_s, std::uint32_t n);
double redist_cost_local(Side side, std::uint64_t q_other, std::uint32_t n);
double redist_cost_random(Side side, std::uint64_t q_r, std::uint64_t q_s, std::uint32_t n);

// Join work for value x on one node: build + probe + output rows.
//   hash:   Q_R + Q_S + Q_R Q_S, all on node h(x)
//   local:  Q^i_self + Q_other + Q^i_self Q_other, on node i
//   random: Q_self/N + Q_other + (Q_self/N) Q_other, on every node
double join_cost_hash(std::uint64_t q_r, std::uint64_t q_s);
double join_cost_local(Side side, std::uint64_t q_i_self, std::uint64_t q_other);
double join_cost_random(Side side, std::uint64_t q_r, std::uint64_t q_s, std::uint32_t n);

// Contribution of the non-skewed values, which every strategy hash-routes.
// Depends only on the workload, so it is computed once per dispatch.
struct CostBaseline {
  double re = 0.0;
  std::vector<double> node_load;
  std::vector<double> node_results;
};

CostBaseline non_skew_baseline(const SkewClassification& cls, const FrequencyMap& freq_r,
                               const FrequencyMap& freq_s, const ClusterSpec& spec);

// Counts of one skewed value, looked up once and shared by every strategy
// costed against the same workload. Node spans are empty when a table lacks x.
struct SkewedValue {
  Key x = 0;
  KeyClass cls = KeyClass::kNonSkewed;
  std::uint64_t q_r = 0;
  std::uint64_t q_s = 0;
  std::span<const std::uint64_t> r_nodes;
  std::span<const std::uint64_t> s_nodes;
};

// Views into the frequency maps, which must outlive the result.
std::vector<SkewedValue> gather_skewed(const SkewClassification& cls, const FrequencyMap& freq_r,
                                       const FrequencyMap& freq_s);

// Walks the skewed values only: O(k * N) given the baseline.
CostBreakdown estimate(Strategy strategy, const SkewClassification& cls,
                       const FrequencyMap& freq_r, const FrequencyMap& freq_s,
                       const ClusterSpec& spec, const CostBaseline& baseline, MergeMode merge_mode,
                       const CostWeights& weights = {});

CostBreakdown estimate(Strategy strategy, const SkewClassification& cls,
                       std::span<const SkewedValue> values, const ClusterSpec& spec,
                       const CostBaseline& baseline, MergeMode merge_mode,
                       const CostWeights& weights = {});
CostBreakdown estimate(Strategy strategy, const SkewClassification& cls,
                       const FrequencyMap& freq_r, const FrequencyMap& freq_s,
                       const ClusterSpec& spec, MergeMode merge_mode,
                       const CostWeights& weights = {});

}  // namespace skewjoin
