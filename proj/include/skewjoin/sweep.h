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
#include <optional>
#include <string>
#include <vector>

#include "skewjoin/harness.h"

namespace skewjoin {

// A grid of experiments. Every empty axis contributes the base value only, so
// a config without axes yields one row per strategy.
//
// Config files hold one "key = value" per line; '#' starts a comment. Axis
// and list keys take comma-separated values:
//
//   workload    = zipf | single
//   strategies  = grahj, prpd, prpd-u, prpd-sfr, pnr, auto
//   ratio       = 5, 10, 20        # axis: r_rows = ratio * s_rows
//   zipf_z      = 1.0, 1.25, 1.5   # axis: both tables' Zipf factor
//   nodes       = 3, 6, 12         # axis
//   probe_skew  = 0.01, 0.05       # axis: fraction of R on skew_key
//   gateway     = 0, 1, 2          # axis
//
// Scalars: r_rows s_rows n_distinct r_z s_z skew_key build_skew distinct_rest
// payload_width seed threshold merge placement repeat workers verify timing
// paper_scale hash_offset.
struct SweepConfig {
  WorkloadSpec workload;
  ExperimentConfig base;
  std::vector<std::optional<Strategy>> strategies{std::nullopt};
  std::vector<double> ratios;
  std::vector<double> zipf_z;
  std::vector<std::uint32_t> nodes;
  std::vector<double> probe_skew;
  std::vector<NodeId> gateways;
  bool paper_scale = false;  // multiplies r_rows and s_rows by 10
};

// Throws ConfigError naming origin:line for every malformed line.
SweepConfig parse_sweep(std::istream& in, const std::string& origin = "<config>");
SweepConfig load_sweep(const std::string& path);

struct SweepPoint {
  WorkloadSpec workload;
  ExperimentConfig config;
};

// Grid order: ratio, zipf_z, nodes, probe_skew, gateway, strategy (last varies
// fastest).
std::vector<SweepPoint> expand_sweep(const SweepConfig& sweep);

std::vector<RunReport> run_sweep(const SweepConfig& sweep);

}  // namespace skewjoin
