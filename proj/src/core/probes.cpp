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

#include "littlewood/probes.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "littlewood/error.hpp"
#include "littlewood/rng.hpp"
#include "parallel.hpp"

namespace lw {
namespace {

const double kPi = std::acos(-1.0);

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

// r^{2k} without accumulating a running product.
double weight(double log_r, std::size_t k) { return std::exp(2.0 * double(k) * log_r); }

double wrap_angle(double x) { return std::remainder(x, 2.0 * kPi); }

double uniform01(std::uint64_t word) { return double(word >> 11) * 0x1.0p-53; }

void require_n(std::size_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": n must be at least 1");
}

void require_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument(std::string(what) + ": radius must be positive");
}

Complex trig_polynomial(std::span<const Complex> coeffs, std::span<const std::int64_t> freqs, double x) {
  Complex t = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) t += coeffs[l] * std::polar(1.0, double(freqs[l]) * x);
  return t;
}

struct GridMax {
  double value = 0.0;
  double spacing = 0.0;
};

// Max of |T| on a uniform grid over [lo, hi], then once more on a grid of the same
// size spanning the two cells around the best point.
GridMax grid_sup(std::span<const Complex> coeffs, std::span<const std::int64_t> freqs, double lo, double hi,
                 std::size_t grid) {
  const double step = (hi - lo) / double(grid - 1);
  double best = -1.0, best_x = lo;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = lo + step * double(i);
    const double v = std::abs(trig_polynomial(coeffs, freqs, x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  const double a = std::max(lo, best_x - step), b = std::min(hi, best_x + step);
  const double fine = (b - a) / double(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    best = std::max(best, std::abs(trig_polynomial(coeffs, freqs, a + fine * double(i))));
  }
  return {best, step};
}

TuranReport turan_at(std::span<const Complex> coeffs, std::span<const std::int64_t> freqs, double e_lo, double e_hi,
                     std::size_t grid) {
  std::int64_t max_freq = 0;
  for (std::int64_t f : freqs) max_freq = std::max(max_freq, f < 0 ? -f : f);
  const double mu_e = (e_hi - e_lo) / (2.0 * kPi);
  const double factor = std::pow(12.0 / mu_e, double(coeffs.size()) - 1.0);

  const GridMax whole = grid_sup(coeffs, freqs, -kPi, kPi, grid);
  const GridMax on_e = grid_sup(coeffs, freqs, e_lo, e_hi, grid);

  TuranReport out;
  out.lhs_sup = whole.value;
  out.sup_on_e = on_e.value;
  out.rhs = factor * on_e.value;
  // Bernstein: |T'| <= M sup|T|, so the true sup over E is at most grid max / (1 - M h / 2).
  const double slack = double(max_freq) * on_e.spacing / 2.0;
  out.rhs_upper = slack < 1.0 ? out.rhs / (1.0 - slack) : std::numeric_limits<double>::infinity();
  out.pass = out.lhs_sup <= out.rhs_upper * (1.0 + 1e-12);
  return out;
}

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

HighPrecision sigma_sq_direct_hp(std::size_t n, const HighPrecision& r) {
  const HighPrecision r2 = r * r;
  HighPrecision sum = 0, w = 1;
  for (std::size_t k = 0; k < n; ++k) {
    sum += w;
    w *= r2;
  }
  return sum;
}

HighPrecision sigma_sq_closed_hp(std::size_t n, const HighPrecision& r) {
  const HighPrecision r2 = r * r;
  return (boost::multiprecision::pow(r2, double(n)) - 1) / (r2 - 1);
}

HighPrecision taylor_lhs(std::size_t n, double tau, bool direct) {
  const HighPrecision r = HighPrecision(1) + HighPrecision(tau);
  const HighPrecision s2 = direct ? sigma_sq_direct_hp(n, r) : sigma_sq_closed_hp(n, r);
  const HighPrecision quotient = (log(s2) - log(HighPrecision(n))) / (2 * log1p(HighPrecision(tau)));
  return abs(quotient - HighPrecision(n) / 2);
}

bool taylor_holds(std::size_t n, double tau) {
  return taylor_lhs(n, tau, false) <= HighPrecision(2) * tau * HighPrecision(n) * HighPrecision(n);
}

}  // namespace

CovMatrix2 covariance2(std::size_t n, double r, double theta) {
  require_n(n, "covariance2");
  require_radius(r, "covariance2");
  const double log_r = std::log(r);
  NeumaierSum cc, cs, ss;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = weight(log_r, k);
    const double c = std::cos(double(k) * theta), s = std::sin(double(k) * theta);
    cc.add(w * c * c);
    cs.add(w * c * s);
    ss.add(w * s * s);
  }
  const double s2 = sigma_sq(n, r);
  CovMatrix2 v;
  v.entries = {cc.value() / s2, cs.value() / s2, cs.value() / s2, ss.value() / s2};
  return v;
}

CovMatrix4 covariance4(std::size_t n, double r, double theta, double phi) {
  require_n(n, "covariance4");
  require_radius(r, "covariance4");
  const double log_r = std::log(r);
  std::array<NeumaierSum, 16> acc;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = weight(log_r, k);
    const std::array<double, 4> u = {std::cos(double(k) * theta), std::sin(double(k) * theta),
                                     std::cos(double(k) * phi), std::sin(double(k) * phi)};
    for (int i = 0; i < 4; ++i) {
      for (int j = i; j < 4; ++j) acc[4 * i + j].add(w * u[i] * u[j]);
    }
  }
  const double s2 = sigma_sq(n, r);
  CovMatrix4 v;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      v.entries[4 * i + j] = v.entries[4 * j + i] = acc[4 * i + j].value() / s2;
    }
  }
  return v;
}

CovMatrix4 covariance4_from_trig_sums(std::size_t n, double r, double theta, double phi) {
  require_n(n, "covariance4_from_trig_sums");
  auto sum_at = [&](double eta) {
    const Complex guard = 1.0 - r * r * std::polar(1.0, eta);
    return std::abs(guard) > 1e-8 ? weighted_exp_sum_closed(n, r, eta) : weighted_exp_sum(n, r, eta);
  };
  const Complex d = sum_at(theta - phi), s = sum_at(theta + phi);
  const Complex t2 = sum_at(2.0 * theta), p2 = sum_at(2.0 * phi);
  std::array<double, 16> e{};
  auto set = [&](int i, int j, double x) { e[4 * i + j] = e[4 * j + i] = x; };
  set(0, 0, 0.5 * (1.0 + t2.real()));
  set(0, 1, 0.5 * t2.imag());
  set(1, 1, 0.5 * (1.0 - t2.real()));
  set(2, 2, 0.5 * (1.0 + p2.real()));
  set(2, 3, 0.5 * p2.imag());
  set(3, 3, 0.5 * (1.0 - p2.real()));
  set(0, 2, 0.5 * (d.real() + s.real()));  // cos cos
  set(0, 3, 0.5 * (s.imag() - d.imag()));  // cos(k theta) sin(k phi)
  set(1, 2, 0.5 * (s.imag() + d.imag()));  // sin(k theta) cos(k phi)
  set(1, 3, 0.5 * (d.real() - s.real()));  // sin sin
  CovMatrix4 v;
  v.entries = e;
  return v;
}

double cov_deviation(std::span<const double> entries, std::size_t dim) {
  if (entries.size() != dim * dim) throw InvalidArgument("cov_deviation: entries do not form a square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      worst = std::max(worst, std::abs(entries[dim * i + j] - (i == j ? 0.5 : 0.0)));
    }
  }
  return worst;
}

Complex weighted_exp_sum(std::size_t n, double r, double eta) {
  require_n(n, "weighted_exp_sum");
  require_radius(r, "weighted_exp_sum");
  const double log_r = std::log(r);
  NeumaierSum re, im;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = weight(log_r, k);
    re.add(w * std::cos(double(k) * eta));
    im.add(w * std::sin(double(k) * eta));
  }
  return Complex(re.value(), im.value()) / sigma_sq(n, r);
}

Complex weighted_exp_sum_closed(std::size_t n, double r, double eta) {
  require_n(n, "weighted_exp_sum_closed");
  require_radius(r, "weighted_exp_sum_closed");
  const double log_r = std::log(r);
  const double r2m1 = (r - 1.0) * (r + 1.0);
  // 1 - r^2 e^{i eta}, written to avoid cancellation near r = 1, eta = 0.
  const double half = std::sin(0.5 * eta);
  const Complex den(2.0 * half * half - r2m1 * std::cos(eta), -(r * r) * std::sin(eta));
  if (std::abs(den) <= 1e-8) throw InvalidArgument("weighted_exp_sum_closed: removable singularity");
  const double grow = std::expm1(2.0 * double(n) * log_r);  // r^{2n} - 1
  const double n_eta = double(n) * eta;
  const double half_n = std::sin(0.5 * n_eta);
  const Complex num(2.0 * half_n * half_n - grow * std::cos(n_eta), -(grow + 1.0) * std::sin(n_eta));
  return num / den / sigma_sq(n, r);
}

TrigSum trig_sum(std::size_t n, double r, double eta) {
  TrigSum out;
  out.value = std::abs(weighted_exp_sum(n, r, eta));
  const Complex guard = 1.0 - r * r * std::polar(1.0, eta);
  out.closed_form_valid = std::abs(guard) > 1e-8;
  out.closed_form = out.closed_form_valid ? std::abs(weighted_exp_sum_closed(n, r, eta))
                                          : std::numeric_limits<double>::quiet_NaN();
  return out;
}

TaylorReport taylor_bound_check(std::size_t n, double tau) {
  require_n(n, "taylor_bound_check");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidArgument("taylor_bound_check: tau must lie in (0, 1)");
  TaylorReport out;
  out.lhs = taylor_lhs(n, tau, true).convert_to<double>();
  out.bound = 2.0 * tau * double(n) * double(n);
  out.pass = out.lhs <= out.bound;

  std::uint64_t hi = 1;
  while (!taylor_holds(hi, tau) && hi < (std::uint64_t{1} << 40)) hi <<= 1;
  std::uint64_t lo = hi / 2;  // fails (or is zero)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (taylor_holds(mid, tau) ? hi : lo) = mid;
  }
  out.threshold_n = hi;
  return out;
}

TuranReport turan_check(std::span<const Complex> coeffs, std::span<const std::int64_t> freqs, double e_lo,
                        double e_hi, std::size_t grid) {
  if (coeffs.empty() || coeffs.size() != freqs.size()) {
    throw InvalidArgument("turan_check: need matching, non-empty coefficient and frequency lists");
  }
  if (!(e_lo < e_hi)) throw InvalidArgument("turan_check: E is empty");
  if (e_lo < -kPi - 1e-12 || e_hi > kPi + 1e-12) throw InvalidArgument("turan_check: E must lie in [-pi, pi]");
  if (grid < 2) throw InvalidArgument("turan_check: grid needs at least 2 points");
  for (const Complex& b : coeffs) {
    const double m = std::abs(b);
    if (m < 0.5 - 1e-12 || m > 1.0 + 1e-12) throw InvalidArgument("turan_check: |b| must lie in [1/2, 1]");
  }
  std::vector<std::int64_t> sorted(freqs.begin(), freqs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("turan_check: frequencies must be distinct");
  }

  TuranReport out = turan_at(coeffs, freqs, e_lo, e_hi, grid);
  if (!out.pass && grid < 1000000) {
    out = turan_at(coeffs, freqs, e_lo, e_hi, 1000000);
    out.refined = true;
  }
  return out;
}

TuranInstance random_turan_instance(std::uint64_t seed, std::size_t max_h, std::int64_t max_freq) {
  if (max_h == 0 || max_freq < 0 || std::uint64_t(2 * max_freq + 1) < max_h) {
    throw InvalidArgument("random_turan_instance: not enough distinct frequencies");
  }
  std::uint64_t counter = 0;
  auto next = [&] { return stream_word(seed, counter++); };
  TuranInstance inst;
  const std::size_t h = 1 + next() % max_h;
  while (inst.freqs.size() < h) {
    const std::int64_t f = std::int64_t(next() % std::uint64_t(2 * max_freq + 1)) - max_freq;
    if (std::find(inst.freqs.begin(), inst.freqs.end(), f) == inst.freqs.end()) inst.freqs.push_back(f);
  }
  for (std::size_t l = 0; l < h; ++l) {
    const double modulus = 0.5 + 0.5 * uniform01(next());
    inst.coeffs.push_back(std::polar(modulus, 2.0 * kPi * uniform01(next())));
  }
  const double length = 0.05 + (2.0 * kPi - 0.05) * uniform01(next());
  inst.e_lo = -kPi + (2.0 * kPi - length) * uniform01(next());
  inst.e_hi = inst.e_lo + length;
  return inst;
}

std::vector<double> normalized_power_samples(std::size_t n, double r, double theta, std::size_t m,
                                             std::uint64_t seed, std::size_t workers) {
  require_n(n, "normalized_power_samples");
  require_radius(r, "normalized_power_samples");
  const Complex z = std::polar(r, theta);
  const double s2 = sigma_sq(n, r);
  std::vector<double> out(m);
  detail::parallel_for_index(m, workers, [&](std::size_t i) {
    out[i] = std::norm(eval_point(sample(n, derive_seed(seed, i)), z)) / s2;
  });
  return out;
}

double ks_distance_exponential(std::vector<double> samples) {
  if (samples.empty()) throw InvalidArgument("ks_distance_exponential: no samples");
  std::sort(samples.begin(), samples.end());
  const double m = double(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = -std::expm1(-samples[i]);
    d = std::max({d, (double(i) + 1.0) / m - f, f - double(i) / m});
  }
  return d;
}

double ks_distance_exponential2(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || xs.size() != ys.size()) throw InvalidArgument("ks_distance_exponential2: bad sample arrays");
  const std::size_t m = xs.size();
  auto cdf = [](double x) { return -std::expm1(-x); };
  std::vector<double> ux(xs.begin(), xs.end()), uy(ys.begin(), ys.end());
  std::sort(ux.begin(), ux.end());
  ux.erase(std::unique(ux.begin(), ux.end()), ux.end());
  std::sort(uy.begin(), uy.end());
  uy.erase(std::unique(uy.begin(), uy.end()), uy.end());

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<std::size_t> yrank(m);
  for (std::size_t i = 0; i < m; ++i) {
    yrank[i] = std::size_t(std::lower_bound(uy.begin(), uy.end(), ys[i]) - uy.begin());
  }

  // Below the smallest sample in either coordinate the empirical CDF is 0.
  double d = std::max(cdf(ux.front()), cdf(uy.front()));
  std::vector<std::size_t> column(uy.size(), 0);
  std::size_t next = 0;
  for (std::size_t a = 0; a < ux.size(); ++a) {
    while (next < m && xs[order[next]] <= ux[a]) ++column[yrank[order[next++]]];
    const double fx_lo = cdf(ux[a]);
    const double fx_hi = a + 1 < ux.size() ? cdf(ux[a + 1]) : 1.0;
    std::size_t cumulative = 0;
    for (std::size_t b = 0; b < uy.size(); ++b) {
      cumulative += column[b];
      const double emp = double(cumulative) / double(m);
      const double fy_lo = cdf(uy[b]);
      const double fy_hi = b + 1 < uy.size() ? cdf(uy[b + 1]) : 1.0;
      d = std::max({d, std::abs(emp - fx_lo * fy_lo), std::abs(emp - fx_hi * fy_hi)});
    }
  }
  return d;
}

CdfDistance cdf_distance(std::size_t n, double r, double theta, std::size_t m, std::uint64_t seed,
                         std::size_t workers) {
  if (m == 0) throw InvalidArgument("cdf_distance: m must be at least 1");
  CdfDistance out;
  out.samples = m;
  out.in_regime = std::abs(wrap_angle(theta)) >= 1.0 / std::sqrt(double(n));
  out.distance = ks_distance_exponential(normalized_power_samples(n, r, theta, m, seed, workers));
  return out;
}

CdfDistance cdf_distance2(std::size_t n, double r, double theta, double phi, std::size_t m, std::uint64_t seed,
                          std::size_t workers) {
  if (m == 0) throw InvalidArgument("cdf_distance2: m must be at least 1");
  const double cut = 1.0 / std::sqrt(double(n));
  CdfDistance out;
  out.samples = m;
  out.in_regime = std::abs(wrap_angle(theta)) > cut && std::abs(wrap_angle(phi)) > cut &&
                  std::abs(wrap_angle(theta - phi)) > cut;
  const std::vector<double> xs = normalized_power_samples(n, r, theta, m, seed, workers);
  const std::vector<double> ys = normalized_power_samples(n, r, phi, m, seed, workers);
  out.distance = ks_distance_exponential2(xs, ys);
  return out;
}

double small_ball_fraction(const LittlewoodPoly& p, double r, double a, std::size_t nodes) {
  const EvalGrid grid = eval_grid(p, r, nodes);
  std::size_t hits = 0;
  for (const Complex& v : grid.values) hits += std::abs(v) <= a ? 1 : 0;
  return double(hits) / double(nodes);
}

SmallBallEstimate small_ball(std::size_t n, double r, double a, std::size_t m, std::size_t nodes, std::uint64_t seed,
                             std::size_t workers) {
  require_n(n, "small_ball");
  require_radius(r, "small_ball");
  if (!(a > 0.0 && a < 1.0 / 3.0)) throw InvalidArgument("small_ball: a must lie in (0, 1/3)");
  if (m == 0 || nodes == 0) throw InvalidArgument("small_ball: m and N must be at least 1");
  std::vector<double> fractions(m);
  detail::parallel_for_index(m, workers, [&](std::size_t i) {
    fractions[i] = small_ball_fraction(sample(n, derive_seed(seed, i)), r, a, nodes);
  });
  NeumaierSum sum;
  for (double f : fractions) sum.add(f);
  const double mean = sum.value() / double(m);
  NeumaierSum sq;
  for (double f : fractions) sq.add((f - mean) * (f - mean));
  SmallBallEstimate out;
  out.a = a;
  out.estimate = mean;
  out.std_error = m > 1 ? std::sqrt(sq.value() / double(m - 1) / double(m)) : 0.0;
  out.samples = m;
  out.nodes = nodes;
  return out;
}

}  // namespace lw
