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

#include "littlewood/mc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "littlewood/error.hpp"
#include "littlewood/logint.hpp"
#include "littlewood/probes.hpp"
#include "littlewood/roots.hpp"
#include "parallel.hpp"

namespace lw {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kJensenHalfWidth = 5e-4;
constexpr double kJensenIntegerTol = 1e-2;
constexpr std::size_t kChunk = 1024;

class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += (std::abs(sum_) >= std::abs(x)) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double mean_of(const std::vector<double>& v) {
  NeumaierSum s;
  for (double x : v) s.add(x);
  return v.empty() ? 0.0 : s.value() / double(v.size());
}

double jensen_nu(const LittlewoodPoly& p, const ExperimentSpec& spec, std::uint32_t& flags) {
  const double j = jensen_count(p, effective_r_lo(spec), effective_r_hi(spec), effective_nodes(spec));
  const double rounded = std::round(j);
  if (std::abs(j - rounded) <= kJensenIntegerTol) return rounded;
  flags |= kFlagFractionalJensen;
  return j;
}

void summarize_concentration(RunReport& r) {
  const double n = double(r.spec.n);
  std::vector<double> nu;
  for (const auto& rec : r.records) nu.push_back(rec.aux);
  std::size_t within = 0;
  double worst = 0.0;
  for (double v : nu) {
    const double dev = std::abs(v - n / 2.0);
    within += dev <= std::pow(n, 0.9) ? 1 : 0;
    worst = std::max(worst, dev);
  }
  const double mean_nu = mean_of(nu);
  const double sd = std::sqrt(r.variance);
  r.summary = {
      {"mean_nu", mean_nu},
      {"mean_nu_over_n", mean_nu / n},
      {"mean_nu_over_degree", r.spec.n > 1 ? mean_nu / (n - 1.0) : 0.0},
      {"fraction_within_n_pow_0_9", double(within) / double(nu.size())},
      {"max_abs_deviation", worst},
      {"max_abs_deviation_over_n_pow_0_9", worst / std::pow(n, 0.9)},
      {"std_deviation_over_sqrt_n", sd / std::sqrt(n)},
      {"std_deviation_over_n_pow_0_9", sd / std::pow(n, 0.9)},
  };
}

void summarize_mahler(RunReport& r) {
  std::vector<double> squares, ratios;
  std::size_t singular = 0;
  for (const auto& rec : r.records) {
    squares.push_back(rec.value * rec.value);
    ratios.push_back(rec.aux);
    singular += (rec.flags & kFlagSingularNodes) ? 1 : 0;
  }
  std::sort(ratios.begin(), ratios.end());
  r.summary = {
      {"mean_log_integral", r.mean},
      {"target_mean", -kEulerGamma / 2.0},
      {"second_moment", mean_of(squares)},
      {"target_second_moment", kEulerGamma * kEulerGamma / 4.0},
      {"variance", r.variance},
      {"median_m_over_sqrt_n", quantile_sorted(ratios, 0.5)},
      {"target_m_over_sqrt_n", std::exp(-kEulerGamma / 2.0)},
      {"fraction_singular", double(singular) / double(r.records.size())},
  };
}

void summarize_clt(RunReport& r) {
  const ExperimentSpec& s = r.spec;
  std::vector<double> xs, ys;
  for (const auto& rec : r.records) xs.push_back(rec.value);
  const double s2 = sigma_sq(s.n, s.radius);
  const Complex w = std::polar(s.radius, s.phi);
  for (const auto& rec : r.records) {
    const LittlewoodPoly p = s.enumerate_all ? pattern_at(s.n, rec.index) : sample(s.n, rec.seed);
    ys.push_back(std::norm(eval_point(p, w)) / s2);
  }
  const double cut = 1.0 / std::sqrt(double(s.n));
  const bool regime = std::abs(std::remainder(s.theta, 2.0 * M_PI)) >= cut;
  const bool regime2 = std::abs(std::remainder(s.theta, 2.0 * M_PI)) > cut &&
                       std::abs(std::remainder(s.phi, 2.0 * M_PI)) > cut &&
                       std::abs(std::remainder(s.theta - s.phi, 2.0 * M_PI)) > cut;
  r.summary = {
      {"ks_distance", ks_distance_exponential(xs)},
      {"in_regime", regime ? 1.0 : 0.0},
      {"ks_distance_joint", ks_distance_exponential2(xs, ys)},
      {"in_regime_joint", regime2 ? 1.0 : 0.0},
      {"mean_power", r.mean},
  };
}

void summarize_smallball(RunReport& r) {
  r.summary = {
      {"a", r.spec.a},
      {"estimate", r.mean},
      {"std_error", r.std_error},
      {"nodes", double(effective_nodes(r.spec))},
  };
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kConcentration: return "concentration";
    case ExperimentKind::kMahler: return "mahler";
    case ExperimentKind::kClt: return "clt";
    case ExperimentKind::kSmallBall: return "smallball";
  }
  return "?";
}

std::string_view to_string(CountingMethod method) {
  return method == CountingMethod::kRoots ? "roots" : "jensen";
}

ExperimentKind parse_kind(std::string_view name) {
  for (auto k : {ExperimentKind::kConcentration, ExperimentKind::kMahler, ExperimentKind::kClt,
                 ExperimentKind::kSmallBall}) {
    if (name == to_string(k)) return k;
  }
  throw InvalidArgument("unknown experiment kind '" + std::string(name) + "'");
}

CountingMethod parse_method(std::string_view name) {
  if (name == "roots") return CountingMethod::kRoots;
  if (name == "jensen") return CountingMethod::kJensen;
  throw InvalidArgument("unknown counting method '" + std::string(name) + "'");
}

std::size_t effective_nodes(const ExperimentSpec& spec) {
  return spec.nodes > 0 ? spec.nodes : default_nodes(spec.n);
}
double effective_floor(const ExperimentSpec& spec) {
  return spec.floor >= 0.0 ? spec.floor : default_floor(spec.n);
}
double effective_r_lo(const ExperimentSpec& spec) { return spec.r_lo > 0.0 ? spec.r_lo : 1.0 - kJensenHalfWidth; }
double effective_r_hi(const ExperimentSpec& spec) { return spec.r_hi > 0.0 ? spec.r_hi : 1.0 + kJensenHalfWidth; }

std::size_t sample_count(const ExperimentSpec& spec) {
  return spec.enumerate_all ? std::size_t{1} << spec.n : spec.m;
}

void validate(const ExperimentSpec& s) {
  if (s.n == 0) throw InvalidArgument("n must be at least 1");
  if (s.enumerate_all) {
    if (s.n > kMaxEnumerationLength) throw InvalidArgument("enumeration needs n <= 24");
  } else if (s.m == 0) {
    throw InvalidArgument("m must be at least 1");
  }
  if (!(s.radius > 0.0) || !std::isfinite(s.radius)) throw InvalidArgument("radius must be positive");
  if (!(s.band_eps > 0.0)) throw InvalidArgument("band_eps must be positive");
  const bool quadrature = s.kind == ExperimentKind::kMahler ||
                          (s.kind == ExperimentKind::kConcentration && s.method == CountingMethod::kJensen);
  if (quadrature && effective_nodes(s) < 4 * s.n) throw InvalidArgument("nodes must be at least 4n");
  if (s.kind == ExperimentKind::kConcentration) {
    if (!(effective_r_lo(s) < effective_r_hi(s))) throw InvalidArgument("need 0 < r_lo < r_hi");
  }
  if (s.kind == ExperimentKind::kSmallBall && !(s.a > 0.0 && s.a < 1.0 / 3.0)) {
    throw InvalidArgument("a must lie in (0, 1/3)");
  }
}

std::optional<double> RunReport::find(std::string_view key) const {
  for (const auto& [k, v] : summary) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double quantile_sorted(const std::vector<double>& sorted, double level) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double h = (double(sorted.size()) - 1.0) * level;
  const std::size_t lo = std::size_t(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - double(lo)) * (sorted[hi] - sorted[lo]);
}

Histogram make_histogram(const std::vector<double>& values, std::size_t bins) {
  Histogram h;
  if (values.empty()) return h;
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front(), hi = sorted.back();
  if (bins == 0) {
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    const double width = 2.0 * iqr / std::cbrt(double(sorted.size()));
    bins = (width > 0.0 && hi > lo) ? std::size_t(std::ceil((hi - lo) / width)) : 1;
    bins = std::clamp<std::size_t>(bins, 1, 1000);
  }
  const double width = hi > lo ? (hi - lo) / double(bins) : 1.0;
  for (std::size_t i = 0; i < bins; ++i) h.edges.push_back(lo + width * double(i));
  h.edges.push_back(hi > lo ? hi : lo + 1.0);
  h.counts.assign(bins, 0);
  for (double x : values) {
    const auto idx = std::size_t(std::max(0.0, std::floor((x - lo) / width)));
    ++h.counts[std::min(idx, bins - 1)];
  }
  return h;
}

CountComparison compare_counting_paths(const LittlewoodPoly& p, double r_lo, double r_hi, std::size_t nodes,
                                       double band_eps) {
  CountComparison out;
  out.jensen_count = jensen_count(p, r_lo, r_hi, nodes);
  if (p.degree() == 0) return out;
  const RootSet rs = find_roots(p);
  out.roots_converged = rs.all_converged();
  if (!out.roots_converged) {
    out.roots_count = std::numeric_limits<double>::quiet_NaN();
    out.flagged = true;
    return out;
  }
  out.roots_count = count_in_disk_exact(p, rs, band_eps).symmetric_count();
  for (const Complex& z : rs.roots) {
    const double m = std::abs(z);
    if (m >= r_lo - 1e-3 && m <= r_hi + 1e-3) out.flagged = true;
  }
  return out;
}

SampleRecord evaluate_sample(const ExperimentSpec& spec, const LittlewoodPoly& p) {
  SampleRecord rec;
  const double n = double(p.size());
  switch (spec.kind) {
    case ExperimentKind::kConcentration: {
      double nu = 0.0;
      if (p.degree() > 0) {
        if (spec.method == CountingMethod::kRoots) {
          const RootSet rs = find_roots(p);
          if (rs.all_converged()) {
            nu = count_in_disk_exact(p, rs, spec.band_eps).symmetric_count();
          } else {
            rec.flags |= kFlagNotConverged | kFlagFallbackJensen;
            nu = jensen_nu(p, spec, rec.flags);
          }
        } else {
          nu = jensen_nu(p, spec, rec.flags);
        }
      }
      rec.aux = nu;
      rec.value = nu - n / 2.0;
      break;
    }
    case ExperimentKind::kMahler: {
      const std::size_t nodes = effective_nodes(spec);
      const LogIntegral li = log_integral(p, 1.0, nodes, effective_floor(spec));
      rec.value = li.value - 0.5 * std::log(n);
      rec.aux = std::exp(rec.value);
      if (li.singular_nodes > 0) rec.flags |= kFlagSingularNodes;
      if (std::abs(li.refinement_delta) > 1e-3) rec.flags |= kFlagRefinementLarge;
      break;
    }
    case ExperimentKind::kClt: {
      rec.value = std::norm(eval_point(p, std::polar(spec.radius, spec.theta))) / sigma_sq(p.size(), spec.radius);
      rec.aux = rec.value;
      if (std::abs(std::remainder(spec.theta, 2.0 * M_PI)) < 1.0 / std::sqrt(n)) rec.flags |= kFlagRegimeViolation;
      break;
    }
    case ExperimentKind::kSmallBall: {
      rec.value = small_ball_fraction(p, spec.radius, spec.a, effective_nodes(spec));
      rec.aux = rec.value;
      break;
    }
  }
  return rec;
}

RunReport run(const ExperimentSpec& spec, const RunOptions& options) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.spec = spec;
  const std::size_t count = sample_count(spec);
  r.records.resize(count);

  for (std::size_t base = 0; base < count; base += kChunk) {
    const std::size_t len = std::min(kChunk, count - base);
    detail::parallel_for_index(len, options.workers, [&](std::size_t j) {
      const std::size_t i = base + j;
      const std::uint64_t seed = spec.enumerate_all ? i : derive_seed(spec.seed, i);
      const LittlewoodPoly p = spec.enumerate_all ? pattern_at(spec.n, i) : sample(spec.n, seed);
      SampleRecord rec = evaluate_sample(spec, p);
      rec.index = i;
      rec.seed = seed;
      r.records[i] = rec;
    });
    if (options.on_record) {
      for (std::size_t j = 0; j < len; ++j) options.on_record(r.records[base + j]);
    }
  }

  std::vector<double> values;
  values.reserve(count);
  for (const auto& rec : r.records) {
    values.push_back(rec.value);
    r.failures += (rec.flags & kFlagNotConverged) ? 1 : 0;
    r.flagged += rec.flags ? 1 : 0;
  }
  r.mean = mean_of(values);
  NeumaierSum sq;
  for (double v : values) sq.add((v - r.mean) * (v - r.mean));
  r.variance = count > 1 ? sq.value() / double(count - 1) : 0.0;
  r.std_error = std::sqrt(r.variance / double(count));
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t q = 0; q < kQuantileLevels.size(); ++q) r.quantiles[q] = quantile_sorted(sorted, kQuantileLevels[q]);
  r.histogram = make_histogram(values, spec.bins);
  r.degraded = r.failures * 100 > count;

  switch (spec.kind) {
    case ExperimentKind::kConcentration: summarize_concentration(r); break;
    case ExperimentKind::kMahler: summarize_mahler(r); break;
    case ExperimentKind::kClt: summarize_clt(r); break;
    case ExperimentKind::kSmallBall: summarize_smallball(r); break;
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace lw
