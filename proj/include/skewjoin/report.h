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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "skewjoin/harness.h"

namespace skewjoin {

// JSON object with config, metrics, cost_model and (auto only) decision.
std::string report_to_json(const RunReport& report);
std::string reports_to_json(const std::vector<RunReport>& reports);

// {"grahj": {"re":..,"comp":..,"summ":..,"total":..}, ...}
std::string costs_to_json(const std::map<Strategy, CostBreakdown>& costs);

// One header line and one row per report.
void write_reports_csv(std::ostream& out, const std::vector<RunReport>& reports);

}  // namespace skewjoin
