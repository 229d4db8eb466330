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

#include "littlewood/logint.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

#include "intpoly.hpp"
#include "littlewood/error.hpp"
#include "littlewood/roots.hpp"

namespace lw {
namespace {

// Values below this at a root-of-unity node are checked for an exact zero.
constexpr double kZeroCandidate = 1e-6;

class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

Complex horner(const std::vector<double>& a, Complex z) {
  Complex p = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) p = p * z + a[k];
  return p;
}

// P = Phi_b^m Q with m >= 1, for an order b at which P vanishes.
struct CyclotomicZero {
  int multiplicity = 0;
  std::vector<double> cofactor;          // Q
  std::vector<double> phi_derivative;    // Phi_b'
};

std::optional<CyclotomicZero> cyclotomic_zero(const LittlewoodPoly& p, std::uint64_t order) {
  if (detail::euler_phi(order) > p.degree()) return std::nullopt;
  const std::vector<std::int64_t> phi64 = detail::cyclotomic(order);
  const detail::IntPoly phi = detail::make_int_poly(phi64);

  // P mod (x^b - 1) has the same value at every primitive b-th root of unity.
  std::vector<std::int64_t> folded(order, 0);
  for (std::size_t k = 0; k < p.size(); ++k) folded[k % order] += p[k];
  if (!detail::exact_divide(detail::make_int_poly(folded), phi)) return std::nullopt;

  CyclotomicZero out;
  detail::IntPoly rest = detail::make_int_poly(p.coeffs());
  while (auto q = detail::exact_divide(rest, phi)) {
    rest = std::move(*q);
    ++out.multiplicity;
  }
  out.cofactor = detail::to_double(rest);
  out.phi_derivative = detail::to_double(detail::derivative(phi));
  return out;
}

struct CircleMean {
  double value = 0.0;
  std::size_t singular = 0;
};

CircleMean circle_log_mean(const LittlewoodPoly& p, double radius, std::size_t nodes, double floor) {
  const std::size_t n = p.size();
  const double log_r = std::log(radius);
  if (radius > 1.0 && double(n - 1) * log_r > 300.0) {
    // log|P(r e^{it})| = (n-1) log r + log|P*(e^{-it} / r)|; the node set is symmetric.
    const double scaled_floor = floor > 0.0 ? floor * std::exp(-double(n - 1) * log_r) : 0.0;
    CircleMean rev = circle_log_mean(reverse(p), 1.0 / radius, nodes, scaled_floor);
    rev.value += double(n - 1) * log_r;
    return rev;
  }

  const EvalGrid grid = eval_grid(p, radius, nodes);
  const double two_pi = 2.0 * std::acos(-1.0);
  const double log_nodes = std::log(double(nodes));
  std::map<std::uint64_t, std::optional<CyclotomicZero>> zeros_by_order;

  NeumaierSum sum;
  std::size_t singular = 0, excluded = 0;
  for (std::size_t j = 0; j < nodes; ++j) {
    double a = std::abs(grid.values[j]);
    const CyclotomicZero* zero = nullptr;
    if (radius == 1.0 && a < kZeroCandidate) {
      const std::uint64_t order = nodes / std::gcd<std::uint64_t>(j, nodes);
      auto it = zeros_by_order.find(order);
      if (it == zeros_by_order.end()) it = zeros_by_order.emplace(order, cyclotomic_zero(p, order)).first;
      if (it->second) {
        zero = &*it->second;
        a = 0.0;
      }
    }
    if (floor > 0.0) {
      if (a < floor) {
        ++singular;
        sum.add(std::log(floor));
      } else {
        sum.add(std::log(a));
      }
    } else if (zero != nullptr) {
      ++singular;
      const Complex zeta = std::polar(1.0, two_pi * double(j) / double(nodes));
      sum.add(zero->multiplicity * (std::log(std::abs(horner(zero->phi_derivative, zeta))) - log_nodes) +
              std::log(std::abs(horner(zero->cofactor, zeta))));
    } else if (a == 0.0) {
      ++singular;
      ++excluded;
    } else {
      sum.add(std::log(a));
    }
  }
  return {sum.value() / double(nodes - excluded), singular};
}

void check_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument(std::string(what) + ": radius must be positive and finite");
}

}  // namespace

std::size_t default_nodes(std::size_t n) {
  std::size_t target = std::max<std::size_t>(8192, 8 * n);
  std::size_t pow2 = 1;
  while (pow2 < target) pow2 <<= 1;
  return pow2;
}

LogIntegral log_integral(const LittlewoodPoly& p, double radius, std::size_t nodes, double floor) {
  check_radius(radius, "log_integral");
  if (nodes < 4 * p.size()) throw InvalidArgument("log_integral: need at least 4n nodes");
  if (!(floor >= 0.0)) throw InvalidArgument("log_integral: floor must be non-negative");
  const CircleMean coarse = circle_log_mean(p, radius, nodes, floor);
  const CircleMean fine = circle_log_mean(p, radius, 2 * nodes, floor);
  LogIntegral out;
  out.value = coarse.value;
  out.radius = radius;
  out.nodes = nodes;
  out.floor = floor;
  out.singular_nodes = coarse.singular;
  out.refinement_delta = fine.value - coarse.value;
  return out;
}

MahlerMeasure mahler(const LittlewoodPoly& p, std::size_t nodes, bool cross_check) {
  MahlerMeasure out;
  out.integral = log_integral(p, 1.0, nodes, 0.0);
  out.from_integral = std::exp(out.integral.value);
  if (!cross_check) {
    out.from_roots = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (p.degree() == 0) {
    out.from_roots = 1.0;
    return out;
  }
  const RootSet rs = find_roots(p);
  out.roots_converged = rs.all_converged();
  double log_product = 0.0;
  for (const Complex& z : rs.roots) log_product += std::max(0.0, std::log(std::abs(z)));
  out.from_roots = std::exp(log_product);
  return out;
}

double jensen_count(const LittlewoodPoly& p, double r_lo, double r_hi, std::size_t nodes) {
  check_radius(r_lo, "jensen_count");
  check_radius(r_hi, "jensen_count");
  if (!(r_lo < r_hi)) throw InvalidArgument("jensen_count: need r_lo < r_hi");
  if (nodes < 4 * p.size()) throw InvalidArgument("jensen_count: need at least 4n nodes");
  const double hi = circle_log_mean(p, r_hi, nodes, 0.0).value;
  const double lo = circle_log_mean(p, r_lo, nodes, 0.0).value;
  return (hi - lo) / std::log1p((r_hi - r_lo) / r_lo);
}

double normalized_log_integral(const LittlewoodPoly& p, double radius, std::size_t nodes, double floor) {
  return log_integral(p, radius, nodes, floor).value - 0.5 * std::log(sigma_sq(p.size(), radius));
}

}  // namespace lw
