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

#ifndef LITTLEWOOD_SRC_CORE_SERIALIZE_HPP_
#define LITTLEWOOD_SRC_CORE_SERIALIZE_HPP_

#include <string>

#include "json.hpp"
#include "littlewood/logint.hpp"
#include "littlewood/mc.hpp"
#include "littlewood/roots.hpp"

namespace lw::detail {

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

// Roots as [re, im, residual] triples.
nlohmann::ordered_json to_json(const RootSet& rs);
nlohmann::ordered_json to_json(const LogIntegral& li);
nlohmann::ordered_json to_json(const ExperimentSpec& spec);
nlohmann::ordered_json to_json(const SampleRecord& rec);
// Wall time is left out unless asked for, so reruns produce identical bytes.
nlohmann::ordered_json to_json(const RunReport& r, bool include_records, bool include_wall_time);

// One line per record: index,seed,value,aux,flags.
std::string records_csv(const RunReport& r);

}  // namespace lw::detail

#endif  // LITTLEWOOD_SRC_CORE_SERIALIZE_HPP_
