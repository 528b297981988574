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

#include "skewjoin/report.h"

#include <ostream>

#include "json.hpp"

namespace skewjoin {

namespace {

using Json = nlohmann::ordered_json;

Json cost_json(const CostBreakdown& c) {
  return Json{{"re", c.re}, {"comp", c.comp}, {"summ", c.summ}, {"total", c.total}};
}

Json costs_json(const std::map<Strategy, CostBreakdown>& costs) {
  Json j = Json::object();
  for (const auto& [s, c] : costs) j[std::string(to_string(s))] = cost_json(c);
  return j;
}

Json workload_json(const WorkloadSpec& w) {
  Json j;
  if (w.kind == WorkloadSpec::Kind::kZipf) {
    j = {{"kind", "zipf"}, {"n_distinct", w.n_distinct}, {"r_z", w.r_z}, {"s_z", w.s_z}};
  } else {
    j = {{"kind", "single"},     {"skew_key", w.skew_key},
         {"probe_skew", w.r_skew}, {"build_skew", w.s_skew},
         {"distinct_rest", w.distinct_rest}};
  }
  j["r_rows"] = w.r_rows;
  j["s_rows"] = w.s_rows;
  j["payload_width"] = w.payload_width;
  j["seed"] = w.seed;
  return j;
}

Json report_json(const RunReport& r) {
  const ExperimentConfig& c = r.config;
  Json config = {{"strategy", strategy_label(c.strategy)},
                 {"nodes", c.cluster.n_nodes},
                 {"gateway", c.cluster.gateway},
                 {"hash_offset", c.cluster.hash_offset},
                 {"threshold", c.threshold},
                 {"merge", to_string(c.merge_mode)},
                 {"placement", c.placement},
                 {"placement_seed", c.placement_seed},
                 {"repeat", c.repeat},
                 {"r_rows", r.r_rows},
                 {"s_rows", r.s_rows},
                 {"swapped", r.swapped}};
  if (r.workload) config["dataset"] = workload_json(*r.workload);

  const RunMetrics& m = r.metrics;
  Json metrics = {{"executed", std::string(to_string(r.executed))},
                  {"result_count", m.result_count},
                  {"cross_node_tuples", m.cross_node_tuples},
                  {"cross_node_bytes", m.cross_node_bytes},
                  {"skewed_cross_node_tuples", m.skewed_cross_node_tuples},
                  {"per_node_processed", m.per_node_processed},
                  {"max_node_load", m.max_node_load},
                  {"merge_traffic", m.merge_traffic},
                  {"wall_ms", m.wall_ms},
                  {"throughput_tuples_per_s", m.throughput_tuples_per_s}};
  if (r.executed_per_run.size() > 1) {
    Json runs = Json::array();
    for (Strategy s : r.executed_per_run) runs.push_back(std::string(to_string(s)));
    metrics["executed_per_run"] = runs;
  }

  Json skew = {{"rho_R", r.skew.rho_r},
               {"rho_S", r.skew.rho_s},
               {"partial_R", r.skew.partial_r},
               {"partial_S", r.skew.partial_s},
               {"complete_left", r.skew.complete_left},
               {"complete_right", r.skew.complete_right}};

  Json j = {{"config", config}, {"skew", skew}, {"metrics", metrics},
            {"cost_model", costs_json(r.cost_model)}};
  if (r.decision) {
    j["decision"] = {{"chosen", std::string(to_string(r.decision->chosen))},
                     {"decision_time_us", r.decision->decision_time.count() / 1e3},
                     {"costs", costs_json(r.decision->costs)}};
  }
  if (r.verified) j["verified"] = *r.verified;
  return j;
}

}  // namespace

std::string report_to_json(const RunReport& report) { return report_json(report).dump(2); }

std::string reports_to_json(const std::vector<RunReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

std::string costs_to_json(const std::map<Strategy, CostBreakdown>& costs) {
  return costs_json(costs).dump(2);
}

void write_reports_csv(std::ostream& out, const std::vector<RunReport>& reports) {
  out << "point,strategy,executed,nodes,gateway,threshold,merge,placement,r_rows,s_rows,"
         "ratio,zipf_z,probe_skew,build_skew,result_count,cross_node_tuples,cross_node_bytes,"
         "max_node_load,merge_traffic,wall_ms,throughput_tuples_per_s,re,comp,summ,total\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const RunReport& r = reports[i];
    const ExperimentConfig& c = r.config;
    const CostBreakdown& cost = r.cost_model.at(r.executed);
    std::string zipf_z, probe, build;
    if (r.workload) {
      if (r.workload->kind == WorkloadSpec::Kind::kZipf) {
        zipf_z = Json(r.workload->r_z).dump();
      } else {
        probe = Json(r.workload->r_skew).dump();
        build = Json(r.workload->s_skew).dump();
      }
    }
    const double ratio = r.s_rows ? static_cast<double>(r.r_rows) / r.s_rows : 0.0;
    out << i << ',' << strategy_label(c.strategy) << ',' << to_string(r.executed) << ','
        << c.cluster.n_nodes << ',' << c.cluster.gateway << ',' << Json(c.threshold).dump() << ','
        << to_string(c.merge_mode) << ',' << c.placement << ',' << r.r_rows << ',' << r.s_rows
        << ',' << Json(ratio).dump() << ',' << zipf_z << ',' << probe << ',' << build << ','
        << r.metrics.result_count << ',' << Json(r.metrics.cross_node_tuples).dump() << ','
        << Json(r.metrics.cross_node_bytes).dump() << ',' << Json(r.metrics.max_node_load).dump()
        << ',' << Json(r.metrics.merge_traffic).dump() << ',' << Json(r.metrics.wall_ms).dump()
        << ',' << Json(r.metrics.throughput_tuples_per_s).dump() << ',' << Json(cost.re).dump()
        << ',' << Json(cost.comp).dump() << ',' << Json(cost.summ).dump() << ','
        << Json(cost.total).dump() << '\n';
  }
}

}  // namespace skewjoin
