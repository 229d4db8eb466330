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

#include "littlewood/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "intpoly.hpp"
#include "littlewood/error.hpp"

namespace lw {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kStartAngle = 0.377;

struct NewtonStep {
  Complex ratio;     // P(z) / P'(z)
  double abs_value;  // |P(z)|, or |z^-d P(z)| when evaluated through the reversal
  bool negligible;   // |value| is within the running rounding-error bound
};

// Horner with Higham's running error bound. For |z| > 1 the reversed polynomial is
// evaluated at 1/z instead, which keeps every intermediate of order one.
NewtonStep newton_step(std::span<const double> a, Complex z) {
  const std::size_t d = a.size() - 1;
  const bool reversed = std::abs(z) > 1.0;
  const Complex x = reversed ? 1.0 / z : z;
  const double ax = std::abs(x);
  auto coeff = [&](std::size_t j) { return reversed ? a[j] : a[d - j]; };  // j-th from the top
  const double xr = x.real(), xi = x.imag();
  double pr = coeff(0), pi = 0.0, dr = 0.0, di = 0.0;
  double mu = std::abs(pr) * 0.5;
  for (std::size_t j = 1; j <= d; ++j) {
    const double tdr = dr * xr - di * xi + pr;
    di = dr * xi + di * xr + pi;
    dr = tdr;
    const double tpr = pr * xr - pi * xi + coeff(j);
    pi = pr * xi + pi * xr;
    pr = tpr;
    mu = mu * ax + std::sqrt(pr * pr + pi * pi);
  }
  const Complex p(pr, pi), dp(dr, di);
  const double abs_p = std::abs(p);
  const double bound = 4.0 * kEps * (2.0 * mu - abs_p);
  NewtonStep out;
  out.abs_value = abs_p;
  out.negligible = abs_p <= bound;
  if (!reversed) {
    out.ratio = p / dp;
  } else {
    out.ratio = p / (x * (double(d) * p - x * dp));
  }
  return out;
}

double horner_abs(std::span<const double> a, Complex z) {
  Complex p = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) p = p * z + a[k];
  return std::abs(p);
}

RootSet aberth(std::span<const double> a, double start_radius, const RootOptions& opt) {
  const std::size_t d = a.size() - 1;
  RootSet rs;
  rs.roots.resize(d);
  rs.converged.assign(d, false);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t j = 0; j < d; ++j) {
    rs.roots[j] = std::polar(start_radius, two_pi * double(j) / double(d) + kStartAngle);
  }
  std::vector<Complex>& z = rs.roots;
  std::size_t remaining = d;
  int it = 0;
  while (remaining > 0 && it < opt.max_iter) {
    ++it;
    for (std::size_t i = 0; i < d; ++i) {
      if (rs.converged[i]) continue;
      const NewtonStep step = newton_step(a, z[i]);
      if (step.abs_value == 0.0 || step.negligible) {
        rs.converged[i] = true;
        --remaining;
        continue;
      }
      double sr = 0.0, si = 0.0;
      const double zr = z[i].real(), zi = z[i].imag();
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        const double dr = zr - z[j].real(), di = zi - z[j].imag();
        const double m = dr * dr + di * di;
        if (m == 0.0) continue;
        sr += dr / m;
        si -= di / m;
      }
      const Complex ratio = step.ratio;
      Complex w;
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
        // P'(z) vanished: nudge off the critical point.
        w = Complex(1e-7, 1e-7) * std::max(1.0, std::abs(z[i]));
      } else {
        const Complex denom = 1.0 - ratio * Complex(sr, si);
        w = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
      }
      z[i] -= w;
      if (std::abs(w) <= opt.tol) {
        rs.converged[i] = true;
        --remaining;
      }
    }
  }
  rs.iterations = it;

  rs.residuals.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    double res = horner_abs(a, z[i]);
    if (opt.polish && rs.converged[i] && res > 0.0) {
      const NewtonStep step = newton_step(a, z[i]);
      if (std::isfinite(step.ratio.real()) && std::isfinite(step.ratio.imag())) {
        const Complex candidate = z[i] - step.ratio;
        const double cres = horner_abs(a, candidate);
        if (cres <= res) {
          z[i] = candidate;
          res = cres;
        }
      }
    }
    rs.residuals[i] = res;
  }
  return rs;
}

struct DoubleDouble {
  double hi = 0.0, lo = 0.0;
};

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

DoubleDouble dd_mul(DoubleDouble a, double b) {
  const double p = a.hi * b;
  const double e = std::fma(a.hi, b, -p) + a.lo * b;
  return two_sum(p, e);
}

DoubleDouble dd_neg(DoubleDouble a) { return {-a.hi, -a.lo}; }

}  // namespace

bool RootSet::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

RootSet find_roots(const LittlewoodPoly& p, const RootOptions& options) {
  if (p.degree() == 0) throw InvalidArgument("find_roots: polynomial has degree 0");
  std::vector<double> a(p.coeffs().begin(), p.coeffs().end());
  return aberth(a, 1.0, options);
}

RootSet find_roots_real(std::span<const double> coeffs, const RootOptions& options) {
  if (coeffs.size() < 2) throw InvalidArgument("find_roots_real: degree must be at least 1");
  if (coeffs.front() == 0.0 || coeffs.back() == 0.0) {
    throw InvalidArgument("find_roots_real: leading and constant coefficients must be non-zero");
  }
  const double d = double(coeffs.size() - 1);
  const double radius = std::pow(std::abs(coeffs.front() / coeffs.back()), 1.0 / d);
  return aberth(coeffs, radius, options);
}

std::vector<Complex> companion_roots(std::span<const double> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() == 0.0) {
    throw InvalidArgument("companion_roots: need degree >= 1 with non-zero leading coefficient");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(coeffs.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i] / coeffs.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

DiskCount count_in_disk(const RootSet& rs, double band_eps) {
  if (!(band_eps >= 0.0)) throw InvalidArgument("count_in_disk: band_eps must be non-negative");
  if (!rs.all_converged()) throw NotConverged("count_in_disk: root set is not fully converged");
  DiskCount out;
  out.band_eps = band_eps;
  for (const Complex& z : rs.roots) {
    const double m = std::abs(z);
    if (m < 1.0 - band_eps) {
      ++out.inside;
    } else if (m > 1.0 + band_eps) {
      ++out.outside;
    } else {
      ++out.boundary_band;
    }
  }
  return out;
}

DiskCount count_in_disk_exact(const LittlewoodPoly& p, const RootSet& rs, double band_eps) {
  if (!rs.all_converged()) throw NotConverged("count_in_disk_exact: root set is not fully converged");
  if (rs.size() != p.degree()) throw InvalidArgument("count_in_disk_exact: root set does not match polynomial");
  const std::size_t unimodular = unimodular_roots_exact(p);
  std::vector<std::size_t> order(rs.size());
  std::iota(order.begin(), order.end(), 0);
  auto gap = [&](std::size_t i) { return std::abs(std::abs(rs.roots[i]) - 1.0); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return gap(i) < gap(j); });
  DiskCount out;
  out.band_eps = band_eps;
  out.boundary_band = unimodular;
  for (std::size_t k = unimodular; k < order.size(); ++k) {
    if (std::abs(rs.roots[order[k]]) < 1.0) {
      ++out.inside;
    } else {
      ++out.outside;
    }
  }
  return out;
}

std::size_t unimodular_roots_exact(const LittlewoodPoly& p) {
  if (p.degree() == 0) return 0;
  const LittlewoodPoly rev = reverse(p);
  // Leading coefficients are +-1, so a trivial gcd modulo a prime settles it.
  if (detail::gcd_degree_mod_prime(p.coeffs(), rev.coeffs()) <= 0) return 0;
  const detail::IntPoly a = detail::make_int_poly(p.coeffs());
  const detail::IntPoly b = detail::make_int_poly(rev.coeffs());
  const detail::IntPoly g = detail::subresultant_gcd(a, b);
  if (detail::degree(g) <= 0) return 0;

  std::size_t count = 0;
  for (const auto& [factor, multiplicity] : detail::squarefree_decomposition(g)) {
    const std::vector<double> c = detail::to_double(factor);
    std::vector<Complex> roots;
    if (c.size() == 2) {
      roots.push_back(-c[0] / c[1]);
    } else if (c.size() <= 65) {
      roots = companion_roots(c);
    } else {
      roots = find_roots_real(c).roots;
    }
    for (const Complex& z : roots) {
      if (std::abs(std::abs(z) - 1.0) <= 1e-9) count += static_cast<std::size_t>(multiplicity);
    }
  }
  return count;
}

double compensated_abs_eval(const LittlewoodPoly& p, Complex z) {
  const auto c = p.coeffs();
  const double zr = z.real(), zi = z.imag();
  DoubleDouble re{double(c.back()), 0.0}, im{};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    const DoubleDouble nre = dd_add(dd_add(dd_mul(re, zr), dd_neg(dd_mul(im, zi))), {double(c[k]), 0.0});
    const DoubleDouble nim = dd_add(dd_mul(re, zi), dd_mul(im, zr));
    re = nre;
    im = nim;
  }
  return std::hypot(re.hi + re.lo, im.hi + im.lo);
}

ResidualReport verify_residuals(const LittlewoodPoly& p, const RootSet& rs) {
  ResidualReport out;
  out.min_pair_distance = std::numeric_limits<double>::infinity();
  double log_sum = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out.max_residual = std::max(out.max_residual, compensated_abs_eval(p, rs.roots[i]));
    log_sum += std::log(std::abs(rs.roots[i]));
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      out.min_pair_distance = std::min(out.min_pair_distance, std::abs(rs.roots[i] - rs.roots[j]));
    }
  }
  out.log_modulus_sum = log_sum;
  out.modulus_product = std::exp(log_sum);
  return out;
}

}  // namespace lw
