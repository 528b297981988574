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

#include "skewjoin/sweep.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

namespace skewjoin {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <typename T>
T parse_number(const std::string& text) {
  T v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("bad number '" + text + "'");
  return v;
}

double parse_double(const std::string& text) {
  const double v = parse_number<double>(text);
  if (!std::isfinite(v)) throw ConfigError("bad number '" + text + "'");
  return v;
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("bad boolean '" + text + "'");
}

template <typename T, typename F>
std::vector<T> parse_axis(const std::string& value, F parse) {
  std::vector<T> out;
  if (value.empty()) return out;
  for (const auto& item : split_list(value)) out.push_back(parse(item));
  return out;
}

using Setter = std::function<void(SweepConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"workload",
       [](SweepConfig& c, const std::string& v) {
         if (v == "zipf") {
           c.workload.kind = WorkloadSpec::Kind::kZipf;
         } else if (v == "single") {
           c.workload.kind = WorkloadSpec::Kind::kSingleSkew;
         } else {
           throw ConfigError("workload must be zipf or single");
         }
       }},
      {"strategies",
       [](SweepConfig& c, const std::string& v) {
         c.strategies = parse_axis<std::optional<Strategy>>(v, parse_strategy_label);
         if (c.strategies.empty()) throw ConfigError("strategies must not be empty");
       }},
      {"ratio",
       [](SweepConfig& c, const std::string& v) {
         c.ratios = parse_axis<double>(v, [](const std::string& t) {
           const double r = parse_double(t);
           if (r <= 0) throw ConfigError("ratio must be positive");
           return r;
         });
       }},
      {"zipf_z",
       [](SweepConfig& c, const std::string& v) { c.zipf_z = parse_axis<double>(v, parse_double); }},
      {"nodes",
       [](SweepConfig& c, const std::string& v) {
         c.nodes = parse_axis<std::uint32_t>(v, parse_number<std::uint32_t>);
       }},
      {"probe_skew",
       [](SweepConfig& c, const std::string& v) {
         c.probe_skew = parse_axis<double>(v, parse_double);
       }},
      {"gateway",
       [](SweepConfig& c, const std::string& v) {
         c.gateways = parse_axis<NodeId>(v, parse_number<NodeId>);
       }},
      {"r_rows", [](SweepConfig& c, const std::string& v) {
         c.workload.r_rows = parse_number<std::uint64_t>(v);
       }},
      {"s_rows", [](SweepConfig& c, const std::string& v) {
         c.workload.s_rows = parse_number<std::uint64_t>(v);
       }},
      {"n_distinct", [](SweepConfig& c, const std::string& v) {
         c.workload.n_distinct = parse_number<std::uint64_t>(v);
       }},
      {"r_z", [](SweepConfig& c, const std::string& v) { c.workload.r_z = parse_double(v); }},
      {"s_z", [](SweepConfig& c, const std::string& v) { c.workload.s_z = parse_double(v); }},
      {"skew_key",
       [](SweepConfig& c, const std::string& v) { c.workload.skew_key = parse_number<Key>(v); }},
      {"build_skew",
       [](SweepConfig& c, const std::string& v) { c.workload.s_skew = parse_double(v); }},
      {"distinct_rest", [](SweepConfig& c, const std::string& v) {
         c.workload.distinct_rest = parse_number<std::uint64_t>(v);
       }},
      {"payload_width", [](SweepConfig& c, const std::string& v) {
         c.workload.payload_width = parse_number<std::uint32_t>(v);
       }},
      {"seed", [](SweepConfig& c, const std::string& v) {
         c.workload.seed = parse_number<std::uint64_t>(v);
         c.base.placement_seed = c.workload.seed;
       }},
      {"threshold",
       [](SweepConfig& c, const std::string& v) { c.base.threshold = parse_double(v); }},
      {"merge",
       [](SweepConfig& c, const std::string& v) { c.base.merge_mode = parse_merge_mode(v); }},
      {"placement", [](SweepConfig& c, const std::string& v) { c.base.placement = v; }},
      {"repeat",
       [](SweepConfig& c, const std::string& v) { c.base.repeat = parse_number<unsigned>(v); }},
      {"workers",
       [](SweepConfig& c, const std::string& v) { c.base.workers = parse_number<unsigned>(v); }},
      {"verify", [](SweepConfig& c, const std::string& v) { c.base.verify = parse_bool(v); }},
      {"timing", [](SweepConfig& c, const std::string& v) { c.base.timing = parse_bool(v); }},
      {"paper_scale", [](SweepConfig& c, const std::string& v) { c.paper_scale = parse_bool(v); }},
      {"hash_offset", [](SweepConfig& c, const std::string& v) {
         c.base.cluster.hash_offset = parse_number<std::uint64_t>(v);
       }},
  };
  return table;
}

template <typename T>
std::vector<std::optional<T>> axis_or_base(const std::vector<T>& axis) {
  if (axis.empty()) return {std::nullopt};
  return {axis.begin(), axis.end()};
}

}  // namespace

SweepConfig parse_sweep(std::istream& in, const std::string& origin) {
  SweepConfig config;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    const auto where = origin + ":" + std::to_string(line_no) + ": ";
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + key + "'");
    try {
      it->second(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  return config;
}

SweepConfig load_sweep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sweep config '" + path + "'");
  return parse_sweep(in, path);
}

std::vector<SweepPoint> expand_sweep(const SweepConfig& sweep) {
  WorkloadSpec base_workload = sweep.workload;
  if (sweep.paper_scale) {
    base_workload.r_rows *= 10;
    base_workload.s_rows *= 10;
  }
  std::vector<SweepPoint> points;
  for (const auto& ratio : axis_or_base(sweep.ratios)) {
    for (const auto& z : axis_or_base(sweep.zipf_z)) {
      for (const auto& n : axis_or_base(sweep.nodes)) {
        for (const auto& skew : axis_or_base(sweep.probe_skew)) {
          for (const auto& gw : axis_or_base(sweep.gateways)) {
            for (const auto& strategy : sweep.strategies) {
              SweepPoint pt{base_workload, sweep.base};
              if (ratio) {
                pt.workload.r_rows = static_cast<std::uint64_t>(
                    std::llround(*ratio * static_cast<double>(pt.workload.s_rows)));
              }
              if (z) pt.workload.r_z = pt.workload.s_z = *z;
              if (n) pt.config.cluster.n_nodes = *n;
              if (skew) pt.workload.r_skew = *skew;
              if (gw) pt.config.cluster.gateway = *gw;
              pt.config.strategy = strategy;
              points.push_back(std::move(pt));
            }
          }
        }
      }
    }
  }
  return points;
}

std::vector<RunReport> run_sweep(const SweepConfig& sweep) {
  std::vector<RunReport> reports;
  std::optional<WorkloadSpec> cached_spec;
  std::pair<Dataset, Dataset> cached;
  for (const SweepPoint& pt : expand_sweep(sweep)) {
    if (!cached_spec || !(*cached_spec == pt.workload)) {
      cached = make_workload(pt.workload);
      cached_spec = pt.workload;
    }
    reports.push_back(run_experiment(pt.config, cached.first, cached.second, pt.workload));
  }
  return reports;
}

}  // namespace skewjoin
