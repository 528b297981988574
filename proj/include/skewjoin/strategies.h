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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "skewjoin/cluster.h"
#include "skewjoin/stats.h"
#include "skewjoin/types.h"

namespace skewjoin {

enum class Strategy : std::uint8_t { kGraHJ, kPRPD, kPRPDU, kPRPDSfr, kPnR };

// The three sub-operators compared by the dispatcher, in tie-break order.
inline constexpr std::array<Strategy, 3> kDispatchCandidates = {
    Strategy::kGraHJ, Strategy::kPRPD, Strategy::kPnR};

inline constexpr std::array<Strategy, 5> kAllStrategies = {
    Strategy::kGraHJ, Strategy::kPRPD, Strategy::kPRPDU, Strategy::kPRPDSfr, Strategy::kPnR};

std::string_view to_string(Strategy s);
// Accepts grahj, prpd, prpd-u, prpd-sfr, pnr.
std::optional<Strategy> parse_strategy(std::string_view name);

enum class PrpdVariant : std::uint8_t { kLocal, kRandom, kSfr };

// Redistribution action per key class for both tables. Classes without any
// member value are planned hash/hash, so plans only differ where a workload
// actually has skew.
struct RoutePlan {
  std::array<Action, kNumKeyClasses> r_action{};
  std::array<Action, kNumKeyClasses> s_action{};
  std::optional<SfrGrid> sfr_grid;

  Action r(KeyClass c) const { return r_action[index_of(c)]; }
  Action s(KeyClass c) const { return s_action[index_of(c)]; }
  void set(KeyClass c, Action r_act, Action s_act) {
    r_action[index_of(c)] = r_act;
    s_action[index_of(c)] = s_act;
  }

  friend bool operator==(const RoutePlan&, const RoutePlan&) = default;
};

// Every matching (r, s) pair must meet on exactly one node: either both sides
// hash, or one side scatters (local, random_rr, sfr_row) while the other
// co-locates (broadcast, sfr_col).
bool is_paired_correct(const RoutePlan& plan);

RoutePlan plan_grahj(const SkewClassification& cls);

// Non-skewed values hash on both sides. Partial skew keeps the skewed table
// local and broadcasts the other. Complete skew depends on the variant:
//   kLocal:  dominant table local, other broadcast;
//   kRandom: dominant table round-robined, other broadcast (partial skew is
//            round-robined too, instead of kept local);
//   kSfr:    R fragment-replicated along grid rows, S along grid columns.
// n_nodes is only used by kSfr to size the grid.
RoutePlan plan_prpd(const SkewClassification& cls, PrpdVariant variant,
                    std::uint32_t n_nodes = 1);

// partial_R: R local, S broadcast. complete_left: R round-robin, S broadcast.
// complete_right: R broadcast, S round-robin. partial_S and non-skewed: hash.
RoutePlan plan_pnr(const SkewClassification& cls);

RoutePlan plan_for(Strategy strategy, const SkewClassification& cls, std::uint32_t n_nodes);

}  // namespace skewjoin
