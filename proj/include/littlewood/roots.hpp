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

#ifndef LITTLEWOOD_ROOTS_HPP_
#define LITTLEWOOD_ROOTS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "littlewood/poly.hpp"

namespace lw {

struct RootOptions {
  double tol = 1e-12;     // absolute bound on the last Aberth correction
  int max_iter = 500;     // sweeps over all unconverged roots
  bool polish = true;     // one Newton step per converged root afterwards
};

// Roots of a polynomial of degree d, with per-root diagnostics.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |P(root)| by plain Horner
  std::vector<bool> converged;
  int iterations = 0;

  std::size_t size() const { return roots.size(); }
  bool all_converged() const;
};

// Split of the roots relative to the unit circle.
struct DiskCount {
  std::size_t inside = 0;         // |z| < 1 - band_eps
  std::size_t boundary_band = 0;  // 1 - band_eps <= |z| <= 1 + band_eps
  std::size_t outside = 0;        // |z| > 1 + band_eps
  double band_eps = 0.0;

  std::size_t total() const { return inside + boundary_band + outside; }
  // Root count of the disk with band roots split evenly between inside and outside.
  double symmetric_count() const { return double(inside) + 0.5 * double(boundary_band); }
};

struct ResidualReport {
  double max_residual = 0.0;       // compensated |P(root)|
  double min_pair_distance = 0.0;  // smallest |root_i - root_j|; infinity for one root
  double log_modulus_sum = 0.0;    // sum_j log|root_j|; 0 for an exact Littlewood root set
  double modulus_product = 1.0;    // exp(log_modulus_sum)
};

// Aberth-Ehrlich iteration from equispaced starts on the unit circle rotated by
// exp(0.377 i). Roots that do not converge within max_iter keep converged = false;
// the result is returned either way. Throws InvalidArgument for degree 0.
RootSet find_roots(const LittlewoodPoly& p, const RootOptions& options = {});

// Same iteration for a real polynomial (lowest degree first) with non-zero constant
// term; starts on the circle of radius |a_0 / a_d|^(1/d).
RootSet find_roots_real(std::span<const double> coeffs, const RootOptions& options = {});

// Eigenvalues of the companion matrix. Independent cross-check path.
std::vector<Complex> companion_roots(std::span<const double> coeffs);

// Throws NotConverged unless every root converged.
DiskCount count_in_disk(const RootSet& rs, double band_eps);

// Like count_in_disk, but the band holds exactly unimodular_roots_exact(p) roots: the
// ones closest to the unit circle. The rest are split by |z| < 1 versus |z| > 1.
DiskCount count_in_disk_exact(const LittlewoodPoly& p, const RootSet& rs, double band_eps);

// Number of roots on |z| = 1 counted with multiplicity. The exact part is
// g = gcd(P, z^{n-1} P(1/z)) over Z[x] and its square-free split; each square-free
// factor is then rooted numerically and roots with ||z| - 1| <= 1e-9 are kept.
// Caveat: g can also contain off-circle reciprocal pairs {z, 1/conj(z)}; the modulus
// test is what excludes them.
std::size_t unimodular_roots_exact(const LittlewoodPoly& p);

ResidualReport verify_residuals(const LittlewoodPoly& p, const RootSet& rs);

// |P(z)| using double-double (compensated) Horner.
double compensated_abs_eval(const LittlewoodPoly& p, Complex z);

}  // namespace lw

#endif  // LITTLEWOOD_ROOTS_HPP_
