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

#ifndef LITTLEWOOD_LOGINT_HPP_
#define LITTLEWOOD_LOGINT_HPP_

#include <cstddef>

#include "littlewood/poly.hpp"

namespace lw {

// Trapezoid approximation of the circle average of log|P(r e^{i theta})| d theta / 2pi.
struct LogIntegral {
  double value = 0.0;
  double radius = 1.0;
  std::size_t nodes = 0;
  double floor = 0.0;              // |P| is replaced by max(|P|, floor) when floor > 0
  std::size_t singular_nodes = 0;  // nodes with |P| < floor, or exact zeros when floor = 0
  double refinement_delta = 0.0;   // value(2N) - value(N)
};

struct MahlerMeasure {
  double from_integral = 1.0;  // exp of the log-integral at r = 1 (floor 0)
  double from_roots = 1.0;     // prod max(1, |root|); NaN when not requested
  bool roots_converged = true;
  LogIntegral integral;
};

// max(8192, 8n), rounded up to a power of two.
std::size_t default_nodes(std::size_t n);

inline double default_floor(std::size_t n) { return 1.0 / double(n); }

// Requires nodes >= 4n. With floor = 0 and r = 1, nodes where P vanishes exactly
// (P has a cyclotomic factor) are detected with integer arithmetic, counted in
// singular_nodes and left out of the plain sum; in their place goes the
// punctured-trapezoid value of the logarithmic singularity,
// m * (log|Phi_b'(zeta)| - log N) + log|Q(zeta)| for P = Phi_b^m Q.
LogIntegral log_integral(const LittlewoodPoly& p, double radius, std::size_t nodes, double floor);

MahlerMeasure mahler(const LittlewoodPoly& p, std::size_t nodes, bool cross_check = true);

// (I(r_hi) - I(r_lo)) / log(r_hi / r_lo) with floor 0: the root count of the disk of
// radius t averaged against dt / t over [r_lo, r_hi].
double jensen_count(const LittlewoodPoly& p, double r_lo, double r_hi, std::size_t nodes);

// log_integral(...).value - log sigma(r).
double normalized_log_integral(const LittlewoodPoly& p, double radius, std::size_t nodes, double floor);

}  // namespace lw

#endif  // LITTLEWOOD_LOGINT_HPP_
