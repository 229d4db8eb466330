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

#include <gtest/gtest.h>

#include <cmath>
#include <unordered_set>

#include "littlewood/error.hpp"
#include "littlewood/mc.hpp"
#include "littlewood/rng.hpp"
#include "serialize.hpp"

namespace lw {
namespace {

TEST(DeriveSeed, Deterministic) {
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
  EXPECT_NE(derive_seed(5, 9), derive_seed(5, 10));
  EXPECT_NE(derive_seed(5, 9), derive_seed(6, 9));
}

TEST(DeriveSeed, NoCollisionsOverAMillionIndices) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2000000);
  for (std::uint64_t i = 0; i < 1000000; ++i) ASSERT_TRUE(seen.insert(derive_seed(0xC0FFEE, i)).second) << i;
}

TEST(DeriveSeed, DistinctMastersLookIndependent) {
  // 2x2 contingency table of paired signs; chi-square with one degree of freedom,
  // rejected only beyond the p = 1e-6 critical value 23.93.
  for (std::uint64_t master : {1u, 2u, 1000u}) {
    double table[2][2] = {};
    constexpr int kDraws = 200000;
    for (int i = 0; i < kDraws; ++i) {
      const int a = sample(1, derive_seed(master, i))[0] > 0;
      const int b = sample(1, derive_seed(master + 1, i))[0] > 0;
      table[a][b] += 1;
    }
    double chi2 = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const double row = table[a][0] + table[a][1], col = table[0][b] + table[1][b];
        const double expected = row * col / kDraws;
        chi2 += (table[a][b] - expected) * (table[a][b] - expected) / expected;
      }
    }
    EXPECT_LT(chi2, 23.93) << master;
  }
}

TEST(DeriveSeed, ByteFrequenciesUniform) {
  // 256 cells, 255 degrees of freedom; the p = 1e-6 critical value is about 373.
  std::vector<double> counts(256, 0.0);
  constexpr int kWords = 100000;
  for (int i = 0; i < kWords; ++i) {
    std::uint64_t w = stream_word(derive_seed(77, i), 0);
    for (int b = 0; b < 8; ++b, w >>= 8) counts[w & 0xFF] += 1;
  }
  const double expected = 8.0 * kWords / 256.0;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 373.0);
}

TEST(Quantile, TypeSeven) {
  const std::vector<double> v = {1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.25), 2.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.1), 1.4);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 1.0), 5.0);
}

TEST(Histogram, CountsEverySample) {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(std::sin(i * 1.3));
  const Histogram fd = make_histogram(v, 0);
  std::size_t total = 0;
  for (auto c : fd.counts) total += c;
  EXPECT_EQ(total, 1000u);
  EXPECT_EQ(fd.edges.size(), fd.counts.size() + 1);
  // IQR of sin over a dense sample is about 1.41, so the rule gives ~7 bins.
  EXPECT_GE(fd.counts.size(), 5u);
  EXPECT_LE(fd.counts.size(), 10u);
  const Histogram fixed = make_histogram(v, 13);
  EXPECT_EQ(fixed.counts.size(), 13u);
  EXPECT_EQ(make_histogram({2.0, 2.0}, 0).counts, std::vector<std::size_t>{2});
}

TEST(Validate, RejectsBadSpecs) {
  ExperimentSpec s;
  s.n = 0;
  EXPECT_THROW(validate(s), InvalidArgument);
  s = {};
  s.m = 0;
  EXPECT_THROW(validate(s), InvalidArgument);
  s = {};
  s.kind = ExperimentKind::kMahler;
  s.n = 100;
  s.nodes = 399;
  EXPECT_THROW(validate(s), InvalidArgument);
  s = {};
  s.kind = ExperimentKind::kSmallBall;
  s.a = 0.5;
  EXPECT_THROW(validate(s), InvalidArgument);
  s = {};
  s.enumerate_all = true;
  s.n = 25;
  EXPECT_THROW(validate(s), InvalidArgument);
  EXPECT_THROW(parse_kind("bogus"), InvalidArgument);
  EXPECT_EQ(parse_kind("smallball"), ExperimentKind::kSmallBall);
  EXPECT_EQ(parse_method("jensen"), CountingMethod::kJensen);
}

TEST(Run, EnumeratedConcentrationIsExactlyHalf) {
  for (std::size_t n : {2u, 3u, 6u, 9u}) {
    ExperimentSpec s;
    s.n = n;
    s.enumerate_all = true;
    const RunReport r = run(s);
    ASSERT_EQ(r.records.size(), std::size_t{1} << n);
    EXPECT_EQ(r.find("mean_nu_over_degree").value(), 0.5) << n;
    EXPECT_EQ(r.failures, 0u);
  }
}

TEST(Run, IndependentOfWorkerCount) {
  for (auto kind : {ExperimentKind::kConcentration, ExperimentKind::kMahler, ExperimentKind::kClt,
                    ExperimentKind::kSmallBall}) {
    ExperimentSpec s;
    s.kind = kind;
    s.n = 48;
    s.m = 300;
    s.seed = 99;
    s.nodes = kind == ExperimentKind::kSmallBall ? 512 : 0;
    std::string reference;
    for (std::size_t workers : {1u, 2u, 8u}) {
      RunOptions o;
      o.workers = workers;
      const std::string dump = detail::to_json(run(s, o), true, false).dump();
      if (reference.empty()) {
        reference = dump;
      } else {
        EXPECT_EQ(dump, reference) << to_string(kind) << " workers=" << workers;
      }
    }
  }
}

TEST(Run, StreamsRecordsInOrder) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kClt;
  s.n = 16;
  s.m = 2500;
  RunOptions o;
  o.workers = 4;
  std::uint64_t expected = 0;
  o.on_record = [&](const SampleRecord& rec) { EXPECT_EQ(rec.index, expected++); };
  const RunReport r = run(s, o);
  EXPECT_EQ(expected, 2500u);
  EXPECT_EQ(r.records.size(), 2500u);
}

TEST(Run, AggregatesRecomputableFromRecords) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kMahler;
  s.n = 200;
  s.m = 150;
  s.seed = 8;
  const RunReport r = run(s);
  double sum = 0.0;
  for (const auto& rec : r.records) sum += rec.value;
  const double mean = sum / 150.0;
  double sq = 0.0;
  for (const auto& rec : r.records) sq += (rec.value - mean) * (rec.value - mean);
  EXPECT_NEAR(r.mean, mean, 1e-13);
  EXPECT_NEAR(r.variance, sq / 149.0, 1e-13);
  EXPECT_NEAR(r.std_error, std::sqrt(sq / 149.0 / 150.0), 1e-13);
  std::size_t total = 0;
  for (auto c : r.histogram.counts) total += c;
  EXPECT_EQ(total, 150u);
  for (const auto& rec : r.records) EXPECT_NEAR(rec.aux, std::exp(rec.value), 1e-15 * rec.aux);
}

TEST(Run, MahlerVarianceShrinks) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kMahler;
  s.m = 300;
  s.seed = 4;
  s.n = 256;
  const double small_n = run(s).variance;
  s.n = 4096;
  const double large_n = run(s).variance;
  EXPECT_LT(large_n, small_n);
}

TEST(Run, CountingPathsCrossValidate) {
  std::size_t compared = 0;
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const auto p = sample(n, derive_seed(31, i));
      const CountComparison c = compare_counting_paths(p, 1.0 - 5e-4, 1.0 + 5e-4, default_nodes(n), 1e-8);
      if (c.flagged) continue;
      ++compared;
      EXPECT_NEAR(c.jensen_count, c.roots_count, 0.1) << n << " " << i;
    }
  }
  EXPECT_GT(compared, 150u);
}

TEST(Run, JensenMethodMatchesRootsOnUnflaggedSamples) {
  ExperimentSpec s;
  s.n = 40;
  s.m = 100;
  s.seed = 12;
  const RunReport roots = run(s);
  s.method = CountingMethod::kJensen;
  const RunReport jensen = run(s);
  for (std::size_t i = 0; i < 100; ++i) {
    if (jensen.records[i].flags & kFlagFractionalJensen) continue;
    EXPECT_EQ(roots.records[i].value, jensen.records[i].value) << i;
  }
}

TEST(Run, SmallBallSummary) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kSmallBall;
  s.n = 20;
  s.m = 50;
  s.nodes = 1024;
  s.a = 0.2;
  const RunReport r = run(s);
  EXPECT_EQ(r.find("estimate").value(), r.mean);
  EXPECT_GE(r.mean, 0.0);
  EXPECT_LE(r.mean, 1.0);
}

TEST(Serialize, CsvMatchesJsonValues) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kMahler;
  s.n = 30;
  s.m = 20;
  const RunReport r = run(s);
  const std::string csv = detail::records_csv(r);
  const auto j = detail::to_json(r, true, false);
  std::size_t line_start = csv.find('\n') + 1;
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t end = csv.find('\n', line_start);
    const std::string line = csv.substr(line_start, end - line_start);
    line_start = end + 1;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_EQ(std::stod(cells[2]), j["records"][i]["value"].get<double>());
    EXPECT_EQ(std::stod(cells[3]), j["records"][i]["aux"].get<double>());
  }
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_EQ(detail::format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(detail::format_double(M_PI)), M_PI);
}

}  // namespace
}  // namespace lw
