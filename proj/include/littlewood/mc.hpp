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

#ifndef LITTLEWOOD_MC_HPP_
#define LITTLEWOOD_MC_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "littlewood/poly.hpp"
#include "littlewood/rng.hpp"

namespace lw {

enum class ExperimentKind { kConcentration, kMahler, kClt, kSmallBall };
enum class CountingMethod { kRoots, kJensen };

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(CountingMethod method);
// Throw InvalidArgument on unknown names.
ExperimentKind parse_kind(std::string_view name);
CountingMethod parse_method(std::string_view name);

// Zero or negative values for nodes, floor, r_lo and r_hi select the defaults listed
// next to them.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kConcentration;
  std::size_t n = 64;
  std::size_t m = 100;
  std::uint64_t seed = 0;
  double radius = 1.0;
  std::size_t nodes = 0;   // default_nodes(n)
  CountingMethod method = CountingMethod::kRoots;
  double floor = -1.0;     // 1 / n
  double theta = 1.0;
  double phi = 2.0;
  double a = 0.1;
  double band_eps = 1e-8;
  double r_lo = 0.0;       // 1 - 5e-4
  double r_hi = 0.0;       // 1 + 5e-4
  bool enumerate_all = false;  // run over all 2^n patterns instead of m seeds
  std::size_t bins = 0;        // histogram bins; 0 = Freedman-Diaconis
};

// Throws InvalidArgument when the experiment cannot run.
void validate(const ExperimentSpec& spec);

// Effective values after defaults are applied.
std::size_t effective_nodes(const ExperimentSpec& spec);
double effective_floor(const ExperimentSpec& spec);
double effective_r_lo(const ExperimentSpec& spec);
double effective_r_hi(const ExperimentSpec& spec);
std::size_t sample_count(const ExperimentSpec& spec);

enum SampleFlag : std::uint32_t {
  kFlagNotConverged = 1u << 0,
  kFlagFallbackJensen = 1u << 1,
  kFlagFractionalJensen = 1u << 2,
  kFlagSingularNodes = 1u << 3,
  kFlagRefinementLarge = 1u << 4,
  kFlagRegimeViolation = 1u << 5,
};

struct SampleRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;  // derive_seed(spec.seed, index); the pattern index in enumeration mode
  double value = 0.0;      // the statistic of the kind
  double aux = 0.0;        // concentration: nu; mahler: M / sqrt(n); smallball: fraction; clt: |P~|^2
  std::uint32_t flags = 0;
};

struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
};

inline constexpr std::array<double, 7> kQuantileLevels = {0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99};

struct RunReport {
  ExperimentSpec spec;
  std::vector<SampleRecord> records;
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::array<double, 7> quantiles{};
  Histogram histogram;
  // Kind-specific figures, in a fixed order.
  std::vector<std::pair<std::string, double>> summary;
  std::size_t failures = 0;  // records with kFlagNotConverged
  std::size_t flagged = 0;   // records with any flag
  bool degraded = false;     // failures > 1% of records
  double wall_seconds = 0.0;

  std::optional<double> find(std::string_view key) const;
};

struct RunOptions {
  std::size_t workers = 0;  // 0 = TBB default
  // Called once per record in index order, as soon as the prefix is complete.
  std::function<void(const SampleRecord&)> on_record;
};

RunReport run(const ExperimentSpec& spec, const RunOptions& options = {});

// The statistic for one polynomial. Exposed so callers can reproduce single records.
SampleRecord evaluate_sample(const ExperimentSpec& spec, const LittlewoodPoly& p);

// Root count of the disk by both paths, for cross-validation.
struct CountComparison {
  double roots_count = 0.0;   // inside + band / 2
  double jensen_count = 0.0;  // raw radially averaged count
  bool roots_converged = true;
  // A root modulus lies within 1e-3 of r_lo or r_hi, or between them.
  bool flagged = false;
};

CountComparison compare_counting_paths(const LittlewoodPoly& p, double r_lo, double r_hi, std::size_t nodes,
                                       double band_eps);

// Linear-interpolation quantile (type 7) of sorted data.
double quantile_sorted(const std::vector<double>& sorted, double level);

Histogram make_histogram(const std::vector<double>& values, std::size_t bins);

}  // namespace lw

#endif  // LITTLEWOOD_MC_HPP_
