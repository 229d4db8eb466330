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

#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lwlab {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

Config parse_config(const std::string& text, const std::vector<std::string>& known) {
  Config cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = normalize_key(trim(body.substr(0, eq)));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "missing key");
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
    if (cfg.values.count(key)) {
      cfg.warnings.push_back("line " + std::to_string(line) + ": duplicate key '" + key + "', last value wins");
    }
    cfg.values[key] = value;
  }
  return cfg;
}

Config load_config(const std::string& path, const std::vector<std::string>& known) {
  std::ifstream f(path);
  if (!f) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str(), known);
}

}  // namespace lwlab
