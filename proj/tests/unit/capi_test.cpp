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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "littlewood/littlewood.h"

namespace {

TEST(CApi, PolyLifecycle) {
  lw_poly* p = nullptr;
  ASSERT_EQ(lw_poly_from_string("++-", &p), LW_OK);
  EXPECT_EQ(lw_poly_size(p), 3u);
  std::vector<std::int8_t> c(3);
  ASSERT_EQ(lw_poly_coeffs(p, c.data(), c.size()), LW_OK);
  EXPECT_EQ(c, (std::vector<std::int8_t>{1, 1, -1}));
  char* text = nullptr;
  ASSERT_EQ(lw_poly_to_string(p, &text), LW_OK);
  EXPECT_STREQ(text, "++-");
  lw_string_free(text);
  double re = 0, im = 0;
  ASSERT_EQ(lw_poly_eval(p, 2.0, 0.0, &re, &im), LW_OK);
  EXPECT_DOUBLE_EQ(re, -1.0);
  EXPECT_DOUBLE_EQ(im, 0.0);
  lw_poly_free(p);
}

TEST(CApi, InvalidArgumentsReportStatusAndMessage) {
  lw_poly* p = nullptr;
  EXPECT_EQ(lw_poly_from_string("+x-", &p), LW_INVALID_ARGUMENT);
  EXPECT_EQ(p, nullptr);
  EXPECT_STRNE(lw_last_error(), "");
  EXPECT_EQ(lw_poly_sample(0, 1, &p), LW_INVALID_ARGUMENT);
  EXPECT_EQ(lw_poly_sample(3, 1, nullptr), LW_INVALID_ARGUMENT);
  lw_experiment_spec spec = lw_experiment_spec_default();
  spec.n = 0;
  EXPECT_EQ(lw_validate_spec(&spec), LW_INVALID_ARGUMENT);
  int kind = 0;
  EXPECT_EQ(lw_parse_kind("nope", &kind), LW_INVALID_ARGUMENT);
  EXPECT_EQ(lw_parse_kind("mahler", &kind), LW_OK);
  EXPECT_EQ(kind, LW_KIND_MAHLER);
}

TEST(CApi, GoldenRatioRoots) {
  lw_poly* p = nullptr;
  ASSERT_EQ(lw_poly_from_string("++-", &p), LW_OK);
  lw_root_options o = lw_root_options_default();
  lw_roots* rs = nullptr;
  ASSERT_EQ(lw_find_roots(p, &o, &rs), LW_OK);
  ASSERT_EQ(lw_roots_size(rs), 2u);
  EXPECT_TRUE(lw_roots_all_converged(rs));
  std::vector<double> real_parts;
  for (std::size_t i = 0; i < 2; ++i) {
    double re = 0, im = 0, res = 0;
    int conv = 0;
    ASSERT_EQ(lw_roots_get(rs, i, &re, &im, &res, &conv), LW_OK);
    EXPECT_NEAR(im, 0.0, 1e-12);
    real_parts.push_back(re);
  }
  std::sort(real_parts.begin(), real_parts.end());
  // 1 + z - z^2 = 0  <=>  z = (1 -+ sqrt 5) / 2.
  EXPECT_NEAR(real_parts[0], (1.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(real_parts[1], (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  lw_disk_count dc{};
  ASSERT_EQ(lw_count_in_disk(rs, 1e-8, &dc), LW_OK);
  EXPECT_EQ(dc.inside, 1u);
  EXPECT_EQ(dc.outside, 1u);
  lw_roots_free(rs);
  lw_poly_free(p);
}

TEST(CApi, MahlerOfConstantIsOne) {
  lw_poly* p = nullptr;
  ASSERT_EQ(lw_poly_sample(1, 0, &p), LW_OK);
  lw_mahler_measure m{};
  ASSERT_EQ(lw_mahler(p, 0, 1, &m), LW_OK);
  EXPECT_DOUBLE_EQ(m.from_integral, 1.0);
  EXPECT_DOUBLE_EQ(m.from_roots, 1.0);
  lw_poly_free(p);
}

struct Collected {
  std::vector<std::uint64_t> indices;
};

void collect(const lw_sample_record* rec, void* user) { static_cast<Collected*>(user)->indices.push_back(rec->index); }

TEST(CApi, RunStreamsRecordsAndSerializes) {
  lw_experiment_spec spec = lw_experiment_spec_default();
  spec.kind = LW_KIND_CLT;
  spec.n = 32;
  spec.m = 300;
  spec.seed = 5;
  Collected got;
  lw_report* r = nullptr;
  ASSERT_EQ(lw_run(&spec, 2, collect, &got, &r), LW_OK);
  ASSERT_EQ(got.indices.size(), 300u);
  for (std::size_t i = 0; i < got.indices.size(); ++i) EXPECT_EQ(got.indices[i], i);
  EXPECT_EQ(lw_report_record_count(r), 300u);
  double ks = 0;
  ASSERT_EQ(lw_report_summary(r, "ks_distance", &ks), LW_OK);
  EXPECT_GT(ks, 0.0);
  EXPECT_EQ(lw_report_summary(r, "no_such_key", &ks), LW_INVALID_ARGUMENT);
  double median = 0;
  ASSERT_EQ(lw_report_quantile(r, 0.5, &median), LW_OK);
  EXPECT_GT(median, 0.0);

  char* json = nullptr;
  ASSERT_EQ(lw_report_json(r, 0, 0, &json), LW_OK);
  const std::string text(json);
  lw_string_free(json);
  EXPECT_NE(text.find("\"mean\""), std::string::npos);
  EXPECT_EQ(text.find("wall_seconds"), std::string::npos);

  const std::size_t bins = lw_report_histogram_bins(r);
  ASSERT_GT(bins, 0u);
  std::vector<double> edges(bins + 1);
  std::vector<std::size_t> counts(bins);
  ASSERT_EQ(lw_report_histogram(r, edges.data(), counts.data()), LW_OK);
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  EXPECT_EQ(total, 300u);
  lw_report_free(r);
}

TEST(CApi, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    char* s = nullptr;
    ASSERT_EQ(lw_format_double(x, &s), LW_OK);
    EXPECT_EQ(std::strtod(s, nullptr), x);
    lw_string_free(s);
  }
}

TEST(CApi, ProbeWrappers) {
  lw_cov2 v{};
  ASSERT_EQ(lw_covariance2(1000, 1.0, 1.0, &v), LW_OK);
  EXPECT_NEAR(v.entries[0] + v.entries[3], 1.0, 1e-12);
  lw_taylor_report t{};
  ASSERT_EQ(lw_taylor_bound_check(1000, 1e-3, &t), LW_OK);
  EXPECT_TRUE(t.pass);
  lw_turan_instance inst{};
  ASSERT_EQ(lw_random_turan_instance(3, 5, 50, &inst), LW_OK);
  lw_turan_report rep{};
  ASSERT_EQ(lw_turan_check(inst.coeffs, inst.freqs, inst.h, inst.e_lo, inst.e_hi, 20000, &rep), LW_OK);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(lw_trig_sum(0, 1.0, 0.3, nullptr), LW_INVALID_ARGUMENT);
}

}  // namespace
