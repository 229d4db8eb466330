// Copyright 2026 The Littlewood Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace lw::detail {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json to_json(const RootSet& rs) {
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    roots.push_back({rs.roots[i].real(), rs.roots[i].imag(), rs.residuals[i]});
  }
  std::size_t unconverged = 0;
  for (bool c : rs.converged) unconverged += c ? 0 : 1;
  return {{"roots", roots}, {"iterations", rs.iterations}, {"all_converged", unconverged == 0},
          {"unconverged", unconverged}};
}

nlohmann::ordered_json to_json(const LogIntegral& li) {
  return {{"value", li.value},
          {"radius", li.radius},
          {"nodes", li.nodes},
          {"floor", li.floor},
          {"singular_nodes", li.singular_nodes},
          {"refinement_delta", li.refinement_delta}};
}

nlohmann::ordered_json to_json(const ExperimentSpec& s) {
  return {{"kind", to_string(s.kind)},
          {"n", s.n},
          {"m", sample_count(s)},
          {"seed", s.seed},
          {"radius", s.radius},
          {"nodes", effective_nodes(s)},
          {"method", to_string(s.method)},
          {"floor", effective_floor(s)},
          {"theta", s.theta},
          {"phi", s.phi},
          {"a", s.a},
          {"band_eps", s.band_eps},
          {"r_lo", effective_r_lo(s)},
          {"r_hi", effective_r_hi(s)},
          {"enumerate_all", s.enumerate_all},
          {"bins", s.bins}};
}

nlohmann::ordered_json to_json(const SampleRecord& rec) {
  return {{"index", rec.index}, {"seed", rec.seed}, {"value", rec.value}, {"aux", rec.aux}, {"flags", rec.flags}};
}

nlohmann::ordered_json to_json(const RunReport& r, bool include_records, bool include_wall_time) {
  nlohmann::ordered_json j;
  j["spec"] = to_json(r.spec);
  j["samples"] = r.records.size();
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  j["std_error"] = r.std_error;
  nlohmann::ordered_json q = nlohmann::ordered_json::object();
  const char* names[] = {"p01", "p05", "p25", "p50", "p75", "p95", "p99"};
  for (std::size_t i = 0; i < r.quantiles.size(); ++i) q[names[i]] = r.quantiles[i];
  j["quantiles"] = q;
  j["histogram"] = {{"edges", r.histogram.edges}, {"counts", r.histogram.counts}};
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  j["summary"] = summary;
  j["failures"] = r.failures;
  j["flagged"] = r.flagged;
  j["degraded"] = r.degraded;
  if (include_wall_time) j["wall_seconds"] = r.wall_seconds;
  if (include_records) {
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) recs.push_back(to_json(rec));
    j["records"] = recs;
  }
  return j;
}

std::string records_csv(const RunReport& r) {
  std::string out = "index,seed,value,aux,flags\n";
  for (const auto& rec : r.records) {
    out += std::to_string(rec.index) + ',' + std::to_string(rec.seed) + ',' + format_double(rec.value) + ',' +
           format_double(rec.aux) + ',' + std::to_string(rec.flags) + '\n';
  }
  return out;
}

}  // namespace lw::detail
