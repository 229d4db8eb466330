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

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "littlewood/error.hpp"
#include "littlewood/poly.hpp"
#include "littlewood/probes.hpp"

namespace lw {
namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

// Covariance entries summed in 50-digit arithmetic.
std::array<double, 4> covariance2_oracle(std::size_t n, double r, double theta) {
  HighPrecision cc = 0, cs = 0, ss = 0, s2 = 0, w = 1;
  const HighPrecision r2 = HighPrecision(r) * HighPrecision(r), t = theta;
  for (std::size_t k = 0; k < n; ++k) {
    const HighPrecision c = cos(t * k), s = sin(t * k);
    cc += w * c * c;
    cs += w * c * s;
    ss += w * s * s;
    s2 += w;
    w *= r2;
  }
  return {(cc / s2).convert_to<double>(), (cs / s2).convert_to<double>(), (cs / s2).convert_to<double>(),
          (ss / s2).convert_to<double>()};
}

double min_eigenvalue(const double* entries, int dim) {
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = entries[dim * i + j];
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().minCoeff();
}

TEST(Covariance2, SingleTerm) {
  const CovMatrix2 v = covariance2(1, 1.3, 0.4);
  EXPECT_DOUBLE_EQ(v(0, 0), 1.0);
  EXPECT_EQ(v(0, 1), 0.0);
  EXPECT_EQ(v(1, 0), 0.0);
  EXPECT_EQ(v(1, 1), 0.0);
  EXPECT_DOUBLE_EQ(cov_deviation(v), 0.5);
}

TEST(Covariance2, TraceSymmetryPsd) {
  for (std::size_t n : {1u, 2u, 17u, 1000u}) {
    for (double r : {0.9, 1.0, 1.0001}) {
      for (double theta : {0.0, 0.7, 3.0}) {
        const CovMatrix2 v = covariance2(n, r, theta);
        EXPECT_NEAR(v(0, 0) + v(1, 1), 1.0, 1e-12);
        EXPECT_EQ(v(0, 1), v(1, 0));
        EXPECT_GE(min_eigenvalue(v.entries.data(), 2), -1e-12);
      }
    }
  }
}

TEST(Covariance2, MatchesHighPrecisionAndScreen) {
  const CovMatrix2 v = covariance2(10000, 1.0, 0.7);
  const auto oracle = covariance2_oracle(10000, 1.0, 0.7);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(v.entries[i], oracle[i], 1e-12);
  EXPECT_LE(cov_deviation(v), 0.05);
}

TEST(Covariance4, TraceSymmetryPsd) {
  for (std::size_t n : {1u, 5u, 300u}) {
    for (double r : {0.95, 1.0, 1.02}) {
      const CovMatrix4 v = covariance4(n, r, 0.7, 2.0);
      EXPECT_NEAR(v(0, 0) + v(1, 1) + v(2, 2) + v(3, 3), 2.0, 1e-12);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) EXPECT_EQ(v(i, j), v(j, i));
      }
      EXPECT_GE(min_eigenvalue(v.entries.data(), 4), -1e-12);
    }
  }
}

TEST(Covariance4, ProductToSumPathAgrees) {
  for (std::size_t n : {1u, 3u, 64u, 1000u, 10000u}) {
    for (double r : {0.999, 1.0, 1.0 + 1e-6, 1.001}) {
      for (auto [theta, phi] : {std::pair{0.7, 2.0}, std::pair{-1.2, 0.4}, std::pair{3.0, -3.0}}) {
        const CovMatrix4 a = covariance4(n, r, theta, phi);
        const CovMatrix4 b = covariance4_from_trig_sums(n, r, theta, phi);
        for (int k = 0; k < 16; ++k) EXPECT_NEAR(a.entries[k], b.entries[k], 1e-9) << n << " " << r << " " << k;
      }
    }
  }
}

TEST(Covariance4, DiagonalBlocksAreCovariance2) {
  const CovMatrix4 v = covariance4(500, 1.001, 0.3, 1.9);
  const CovMatrix2 a = covariance2(500, 1.001, 0.3), b = covariance2(500, 1.001, 1.9);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(v(i, j), a(i, j), 1e-14);
      EXPECT_NEAR(v(2 + i, 2 + j), b(i, j), 1e-14);
    }
  }
}

TEST(CovDeviation, HalfIdentity) {
  const std::array<double, 4> half = {0.5, 0.0, 0.0, 0.5};
  EXPECT_EQ(cov_deviation(half, 2), 0.0);
  EXPECT_THROW(cov_deviation(half, 3), InvalidArgument);
}

TEST(CovDeviation, AgreesWithClosedFormAtLargeN) {
  const std::size_t n = 4096;
  const CovMatrix2 v = covariance2(n, 1.0, 1.0);
  const double dev = cov_deviation(v);
  EXPECT_LE(dev, 10.0 / std::sqrt(double(n)));
  // V - Id/2 = [[C, S], [S, -C]] / 2 with C + iS the normalized sum at 2 theta.
  const Complex s = weighted_exp_sum_closed(n, 1.0, 2.0);
  EXPECT_NEAR(dev, 0.5 * std::max(std::abs(s.real()), std::abs(s.imag())), 1e-12);
}

TEST(TrigSum, AlternatingSums) {
  EXPECT_LE(trig_sum(10, 1.0, M_PI).value, 1e-15);
  EXPECT_LE(trig_sum(1000, 1.0, M_PI).value, 1e-13);
  EXPECT_NEAR(trig_sum(11, 1.0, M_PI).value, 1.0 / 11, 1e-15);
  EXPECT_NEAR(trig_sum(1001, 1.0, M_PI).value, 1.0 / 1001, 1e-13);
}

TEST(TrigSum, ClosedFormAgreesNearUnitRadius) {
  const std::size_t n = 10000;
  const TrigSum t = trig_sum(n, 1.0 + 1e-5, 0.3);
  ASSERT_TRUE(t.closed_form_valid);
  EXPECT_NEAR(t.closed_form / t.value, 1.0, 1e-8);
  const double c = t.value * std::sqrt(double(n));
  EXPECT_LE(c, 10.0);
  RecordProperty("C", std::to_string(c));
}

TEST(TrigSum, ClosedFormAgreesOnSweep) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> eta(-M_PI, M_PI), dr(-1e-3, 1e-3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + gen() % 5000;
    const double r = 1.0 + dr(gen), e = eta(gen);
    const TrigSum t = trig_sum(n, r, e);
    if (!t.closed_form_valid) continue;
    EXPECT_NEAR(t.closed_form, t.value, 1e-8 * std::max(t.value, 1e-4)) << n << " " << r << " " << e;
  }
}

TEST(TrigSum, GuardAtRemovableSingularity) {
  const TrigSum t = trig_sum(50, 1.0, 0.0);
  EXPECT_FALSE(t.closed_form_valid);
  EXPECT_TRUE(std::isnan(t.closed_form));
  EXPECT_NEAR(t.value, 1.0, 1e-15);
}

HighPrecision taylor_lhs_oracle(std::size_t n, double tau) {
  // Closed-form sigma in 50 digits, independent of the library's direct sum.
  const HighPrecision r = 1 + HighPrecision(tau);
  const HighPrecision s2 = (pow(r, 2 * int(n)) - 1) / (r * r - 1);
  return abs(log(sqrt(s2) / sqrt(HighPrecision(n))) / log(r) - HighPrecision(n) / 2);
}

TEST(TaylorBound, SmallTauLimit) {
  for (std::size_t n : {2u, 10u, 300u}) {
    EXPECT_NEAR(taylor_bound_check(n, 1e-10).lhs, 0.5, 1e-5) << n;
  }
}

TEST(TaylorBound, Examples) {
  const TaylorReport a = taylor_bound_check(100, 1e-3);
  EXPECT_TRUE(a.pass);
  EXPECT_LE(a.lhs, 20.0);
  EXPECT_DOUBLE_EQ(a.bound, 20.0);
  EXPECT_NEAR(a.lhs, taylor_lhs_oracle(100, 1e-3).convert_to<double>(), 1e-12);

  const double tau = std::pow(1000.0, -1.1);
  const TaylorReport b = taylor_bound_check(1000, tau);
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(b.lhs, taylor_lhs_oracle(1000, tau).convert_to<double>(), 1e-9);
}

TEST(TaylorBound, ThresholdIsSharp) {
  for (double tau : {1e-1, 1e-3, 1e-6}) {
    const TaylorReport r = taylor_bound_check(10, tau);
    ASSERT_GE(r.threshold_n, 1u);
    EXPECT_TRUE(taylor_bound_check(r.threshold_n, tau).pass) << tau;
    if (r.threshold_n > 1) EXPECT_FALSE(taylor_bound_check(r.threshold_n - 1, tau).pass) << tau;
    EXPECT_TRUE(taylor_bound_check(r.threshold_n * 3, tau).pass) << tau;
  }
}

TEST(TaylorBound, RejectsTau) {
  EXPECT_THROW(taylor_bound_check(10, 0.0), InvalidArgument);
  EXPECT_THROW(taylor_bound_check(10, 1.0), InvalidArgument);
}

TEST(Turan, SingleExponential) {
  const std::vector<Complex> b = {std::polar(0.7, 1.0)};
  const std::vector<std::int64_t> f = {5};
  const TuranReport r = turan_check(b, f, -0.3, 0.2, 2000);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs_sup, 0.7, 1e-12);
  EXPECT_NEAR(r.rhs, 0.7, 1e-12);
}

TEST(Turan, Cosine) {
  const std::vector<Complex> b = {1.0, 1.0};
  const std::vector<std::int64_t> f = {1, -1};
  const TuranReport r = turan_check(b, f, 0.0, M_PI / 2, 4001);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs_sup, 2.0, 1e-9);
  EXPECT_NEAR(r.sup_on_e, 2.0, 1e-12);
  EXPECT_NEAR(r.rhs, 48.0 * 2.0, 1e-9);
}

TEST(Turan, RandomInstancesPass) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const TuranInstance t = random_turan_instance(s);
    ASSERT_LE(t.coeffs.size(), 5u);
    const TuranReport r = turan_check(t.coeffs, t.freqs, t.e_lo, t.e_hi, 20000);
    EXPECT_TRUE(r.pass) << "instance " << s;
  }
}

TEST(Turan, InvalidInput) {
  const std::vector<Complex> b = {1.0, 1.0};
  const std::vector<std::int64_t> f = {1, -1}, dup = {2, 2};
  EXPECT_THROW(turan_check(b, f, 0.5, 0.5, 100), InvalidArgument);
  EXPECT_THROW(turan_check(b, dup, 0.0, 1.0, 100), InvalidArgument);
  const std::vector<Complex> small = {0.1, 1.0};
  EXPECT_THROW(turan_check(small, f, 0.0, 1.0, 100), InvalidArgument);
}

TEST(Ks, PointMass) {
  EXPECT_NEAR(ks_distance_exponential({1.0, 1.0, 1.0}), 1.0 - std::exp(-1.0), 1e-15);
  const CdfDistance d = cdf_distance(1, 1.0, 1.0, 10, 3);
  EXPECT_NEAR(d.distance, 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_THROW(cdf_distance(10, 1.0, 1.0, 0, 3), InvalidArgument);
}

TEST(Ks, PermutationInvariant) {
  std::vector<double> v = normalized_power_samples(64, 1.0, 1.0, 500, 9);
  const double d = ks_distance_exponential(v);
  std::mt19937_64 gen(1);
  std::shuffle(v.begin(), v.end(), gen);
  EXPECT_EQ(ks_distance_exponential(v), d);
}

double exact_ks_by_enumeration(std::size_t n, double r, double theta) {
  std::vector<double> v;
  enumerate(n, [&](const LittlewoodPoly& p) { v.push_back(std::norm(normalized_eval(p, std::polar(r, theta)))); });
  return ks_distance_exponential(v);
}

TEST(Ks, ConvergesToEnumerationValue) {
  const double exact = exact_ks_by_enumeration(10, 1.0, 1.0);
  const CdfDistance d = cdf_distance(10, 1.0, 1.0, 200000, 4);
  EXPECT_NEAR(d.distance, exact, 0.01);
}

TEST(Ks, RegimeFlag) {
  EXPECT_TRUE(cdf_distance(100, 1.0, 0.2, 10, 1).in_regime);
  EXPECT_FALSE(cdf_distance(100, 1.0, 0.05, 10, 1).in_regime);
  EXPECT_FALSE(cdf_distance2(100, 1.0, 1.0, 1.05, 10, 1).in_regime);
  EXPECT_TRUE(cdf_distance2(100, 1.0, 1.0, 2.0, 10, 1).in_regime);
}

double ks2_brute_force(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto cdf = [](double x) { return std::isinf(x) ? 1.0 : -std::expm1(-x); };
  std::vector<double> gx(xs), gy(ys);
  gx.push_back(INFINITY);
  gy.push_back(INFINITY);
  double d = 0.0;
  const double m = double(xs.size());
  for (double a : gx) {
    for (double b : gy) {
      std::size_t closed = 0, open = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        closed += (xs[i] <= a && ys[i] <= b) ? 1 : 0;
        open += (xs[i] < a && ys[i] < b) ? 1 : 0;
      }
      const double f = cdf(a) * cdf(b);
      d = std::max({d, std::abs(double(closed) / m - f), std::abs(double(open) / m - f)});
    }
  }
  return d;
}

TEST(Ks2, MatchesBruteForce) {
  for (std::size_t n : {1u, 3u, 40u}) {
    const auto xs = normalized_power_samples(n, 1.0, 1.0, 60, 21);
    const auto ys = normalized_power_samples(n, 1.0, 2.0, 60, 21);
    EXPECT_NEAR(ks_distance_exponential2(xs, ys), ks2_brute_force(xs, ys), 1e-15) << n;
  }
}

TEST(PowerSamples, IndependentOfWorkers) {
  EXPECT_EQ(normalized_power_samples(128, 1.0, 1.0, 3000, 5, 1), normalized_power_samples(128, 1.0, 1.0, 3000, 5, 8));
}

double exact_small_ball(std::size_t n, double a, std::size_t nodes) {
  double total = 0.0;
  enumerate(n, [&](const LittlewoodPoly& p) { total += small_ball_fraction(p, 1.0, a, nodes); });
  return total / double(std::size_t{1} << n);
}

TEST(SmallBall, MatchesEnumeration) {
  const double exact = exact_small_ball(4, 0.1, 1 << 16);
  const SmallBallEstimate e = small_ball(4, 1.0, 0.1, 4000, 4096, 17);
  EXPECT_GT(e.std_error, 0.0);
  EXPECT_LE(std::abs(e.estimate - exact), 2.0 * e.std_error) << exact << " " << e.estimate;
}

TEST(SmallBall, MonotoneInLevel) {
  const SmallBallEstimate a = small_ball(31, 1.0, 0.05, 400, 4096, 3);
  const SmallBallEstimate b = small_ball(31, 1.0, 0.1, 400, 4096, 3);
  const SmallBallEstimate c = small_ball(31, 1.0, 0.2, 400, 4096, 3);
  EXPECT_LE(a.estimate, b.estimate);
  EXPECT_LE(b.estimate, c.estimate);
  for (const auto& e : {a, b, c}) {
    EXPECT_GE(e.estimate, 0.0);
    EXPECT_LE(e.estimate, 1.0);
  }
}

TEST(SmallBall, InvalidLevel) {
  EXPECT_THROW(small_ball(4, 1.0, 0.0, 10, 64, 1), InvalidArgument);
  EXPECT_THROW(small_ball(4, 1.0, 1.0 / 3.0, 10, 64, 1), InvalidArgument);
  EXPECT_THROW(small_ball(4, 1.0, 0.1, 0, 64, 1), InvalidArgument);
}

}  // namespace
}  // namespace lw
