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

#ifndef LITTLEWOOD_PROBES_HPP_
#define LITTLEWOOD_PROBES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "littlewood/poly.hpp"

namespace lw {

// Covariance of (Re, Im) of P~(r e^{i theta}) under random signs. Row-major.
struct CovMatrix2 {
  std::array<double, 4> entries{};
  double operator()(int i, int j) const { return entries[2 * i + j]; }
};

// Joint covariance of (Re, Im) at theta and at phi. Row-major.
struct CovMatrix4 {
  std::array<double, 16> entries{};
  double operator()(int i, int j) const { return entries[4 * i + j]; }
};

struct TrigSum {
  double value = 0.0;        // |sum_k r^{2k} e^{ik eta}| / sigma(r)^2, direct summation
  double closed_form = 0.0;  // same through the geometric-series formula; NaN when guarded
  bool closed_form_valid = false;  // |1 - r^2 e^{i eta}| > 1e-8
};

struct TaylorReport {
  double lhs = 0.0;    // |(log sigma(1+tau) - log sigma(1)) / log(1+tau) - n/2|
  double bound = 0.0;  // 2 tau n^2
  bool pass = false;
  // Smallest n at which the bound holds for this tau (it then holds for all larger n).
  std::uint64_t threshold_n = 0;
};

struct TuranReport {
  double lhs_sup = 0.0;    // sup over [-pi, pi], grid estimate
  double sup_on_e = 0.0;   // sup over E, grid estimate
  double rhs = 0.0;        // (12 / mu(E))^(h-1) * sup_on_e
  double rhs_upper = 0.0;  // rhs inflated by the Bernstein grid slack
  bool pass = false;
  bool refined = false;    // the 10^6-point re-check ran
};

struct TuranInstance {
  std::vector<Complex> coeffs;
  std::vector<std::int64_t> freqs;
  double e_lo = 0.0;
  double e_hi = 0.0;
};

struct CdfDistance {
  double distance = 0.0;
  bool in_regime = true;
  std::size_t samples = 0;
};

struct SmallBallEstimate {
  double a = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::size_t nodes = 0;
};

CovMatrix2 covariance2(std::size_t n, double r, double theta);
CovMatrix4 covariance4(std::size_t n, double r, double theta, double phi);
// The same matrix assembled from weighted exponential sums at theta +- phi, 2 theta
// and 2 phi via the product-to-sum identities.
CovMatrix4 covariance4_from_trig_sums(std::size_t n, double r, double theta, double phi);

double cov_deviation(std::span<const double> entries, std::size_t dim);
inline double cov_deviation(const CovMatrix2& v) { return cov_deviation(v.entries, 2); }
inline double cov_deviation(const CovMatrix4& v) { return cov_deviation(v.entries, 4); }

// sum_k r^{2k} e^{ik eta} / sigma(r)^2 by compensated direct summation.
Complex weighted_exp_sum(std::size_t n, double r, double eta);
// (1 - r^{2n} e^{in eta}) / ((1 - r^2 e^{i eta}) sigma(r)^2); requires the guard to hold.
Complex weighted_exp_sum_closed(std::size_t n, double r, double eta);

TrigSum trig_sum(std::size_t n, double r, double eta);

TaylorReport taylor_bound_check(std::size_t n, double tau);

TuranReport turan_check(std::span<const Complex> coeffs, std::span<const std::int64_t> freqs, double e_lo,
                        double e_hi, std::size_t grid);

// h in [1, max_h], distinct |freq| <= max_freq, |b| in [1/2, 1], E of length >= 0.05.
TuranInstance random_turan_instance(std::uint64_t seed, std::size_t max_h = 5, std::int64_t max_freq = 50);

// |P~(r e^{i theta})|^2 for samples i = 0..m-1 drawn with derive_seed(seed, i).
std::vector<double> normalized_power_samples(std::size_t n, double r, double theta, std::size_t m,
                                             std::uint64_t seed, std::size_t workers = 0);

// Exact sup |F_m - (1 - e^{-x})|, attained at a sample point or its left limit.
double ks_distance_exponential(std::vector<double> samples);

// sup |F_m(x, y) - F(x) F(y)| over the grid induced by the samples.
double ks_distance_exponential2(std::span<const double> xs, std::span<const double> ys);

CdfDistance cdf_distance(std::size_t n, double r, double theta, std::size_t m, std::uint64_t seed,
                         std::size_t workers = 0);
CdfDistance cdf_distance2(std::size_t n, double r, double theta, double phi, std::size_t m, std::uint64_t seed,
                          std::size_t workers = 0);

// Fraction of the N circle nodes where |P(r e^{2 pi i j / N})| <= a.
double small_ball_fraction(const LittlewoodPoly& p, double r, double a, std::size_t nodes);

// p and -p have the same |P|, so the estimator needs no antithetic pairing.
SmallBallEstimate small_ball(std::size_t n, double r, double a, std::size_t m, std::size_t nodes, std::uint64_t seed,
                             std::size_t workers = 0);

}  // namespace lw

#endif  // LITTLEWOOD_PROBES_HPP_
