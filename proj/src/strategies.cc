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

#include "skewjoin/strategies.h"

namespace skewjoin {

namespace {

bool scatters(Action a) {
  return a == Action::kLocal || a == Action::kRandomRR || a == Action::kSfrRow;
}

RoutePlan all_hash() {
  RoutePlan plan;
  plan.r_action.fill(Action::kHash);
  plan.s_action.fill(Action::kHash);
  return plan;
}

// Sets the action pair only if the class has members.
void assign(RoutePlan& plan, const SkewClassification& cls, KeyClass c, Action r, Action s) {
  if (!cls.members(c).empty()) plan.set(c, r, s);
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kGraHJ: return "grahj";
    case Strategy::kPRPD: return "prpd";
    case Strategy::kPRPDU: return "prpd-u";
    case Strategy::kPRPDSfr: return "prpd-sfr";
    case Strategy::kPnR: return "pnr";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool is_paired_correct(const RoutePlan& plan) {
  bool uses_sfr = false;
  for (KeyClass c : kAllKeyClasses) {
    const Action r = plan.r(c);
    const Action s = plan.s(c);
    bool ok = false;
    if (r == Action::kHash || s == Action::kHash) {
      ok = r == s;
    } else if (r == Action::kSfrRow || s == Action::kSfrCol) {
      ok = r == Action::kSfrRow && s == Action::kSfrCol;
      uses_sfr = true;
    } else if (scatters(r)) {
      ok = s == Action::kBroadcast;
    } else if (scatters(s)) {
      ok = r == Action::kBroadcast;
    }
    // sfr_row on S or sfr_col on R has no inbox lane.
    if (s == Action::kSfrRow || r == Action::kSfrCol) ok = false;
    if (!ok) return false;
  }
  return !uses_sfr || plan.sfr_grid.has_value();
}

RoutePlan plan_grahj(const SkewClassification&) { return all_hash(); }

RoutePlan plan_prpd(const SkewClassification& cls, PrpdVariant variant, std::uint32_t n_nodes) {
  RoutePlan plan = all_hash();
  const Action skew_side = variant == PrpdVariant::kRandom ? Action::kRandomRR : Action::kLocal;
  assign(plan, cls, KeyClass::kPartialR, skew_side, Action::kBroadcast);
  assign(plan, cls, KeyClass::kPartialS, Action::kBroadcast, skew_side);
  switch (variant) {
    case PrpdVariant::kLocal:
    case PrpdVariant::kRandom:
      assign(plan, cls, KeyClass::kCompleteLeft, skew_side, Action::kBroadcast);
      assign(plan, cls, KeyClass::kCompleteRight, Action::kBroadcast, skew_side);
      break;
    case PrpdVariant::kSfr:
      assign(plan, cls, KeyClass::kCompleteLeft, Action::kSfrRow, Action::kSfrCol);
      assign(plan, cls, KeyClass::kCompleteRight, Action::kSfrRow, Action::kSfrCol);
      if (!cls.complete_left.empty() || !cls.complete_right.empty()) {
        plan.sfr_grid = SfrGrid::for_nodes(n_nodes);
      }
      break;
  }
  return plan;
}

RoutePlan plan_pnr(const SkewClassification& cls) {
  RoutePlan plan = all_hash();
  assign(plan, cls, KeyClass::kPartialR, Action::kLocal, Action::kBroadcast);
  assign(plan, cls, KeyClass::kCompleteLeft, Action::kRandomRR, Action::kBroadcast);
  assign(plan, cls, KeyClass::kCompleteRight, Action::kBroadcast, Action::kRandomRR);
  return plan;
}

RoutePlan plan_for(Strategy strategy, const SkewClassification& cls, std::uint32_t n_nodes) {
  switch (strategy) {
    case Strategy::kGraHJ: return plan_grahj(cls);
    case Strategy::kPRPD: return plan_prpd(cls, PrpdVariant::kLocal, n_nodes);
    case Strategy::kPRPDU: return plan_prpd(cls, PrpdVariant::kRandom, n_nodes);
    case Strategy::kPRPDSfr: return plan_prpd(cls, PrpdVariant::kSfr, n_nodes);
    case Strategy::kPnR: return plan_pnr(cls);
  }
  return all_hash();
}

}  // namespace skewjoin
