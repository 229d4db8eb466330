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

#ifndef LITTLEWOOD_TOOLS_LWLAB_CONFIG_HPP_
#define LITTLEWOOD_TOOLS_LWLAB_CONFIG_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lwlab {

struct ConfigError : std::runtime_error {
  ConfigError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

struct Config {
  std::map<std::string, std::string> values;
  std::vector<std::string> warnings;
};

// Dashes in keys are read as underscores.
std::string normalize_key(std::string key);

// Line-based "key = value"; '#' starts a comment. Keys outside `known` are errors;
// a repeated key keeps its last value and adds a warning.
Config parse_config(const std::string& text, const std::vector<std::string>& known);
Config load_config(const std::string& path, const std::vector<std::string>& known);

}  // namespace lwlab

#endif  // LITTLEWOOD_TOOLS_LWLAB_CONFIG_HPP_
