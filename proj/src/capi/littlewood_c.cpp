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

#include "littlewood/littlewood.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "littlewood/error.hpp"
#include "littlewood/logint.hpp"
#include "littlewood/mc.hpp"
#include "littlewood/poly.hpp"
#include "littlewood/probes.hpp"
#include "littlewood/rng.hpp"
#include "littlewood/roots.hpp"
#include "serialize.hpp"

struct lw_poly {
  lw::LittlewoodPoly value;
};

struct lw_roots {
  lw::RootSet value;
};

struct lw_report {
  lw::RunReport value;
};

namespace {

thread_local std::string g_last_error;

template <class F>
lw_status guarded(F&& f) {
  try {
    f();
    return LW_OK;
  } catch (const lw::InvalidArgument& e) {
    g_last_error = e.what();
    return LW_INVALID_ARGUMENT;
  } catch (const lw::NotConverged& e) {
    g_last_error = e.what();
    return LW_NOT_CONVERGED;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LW_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LW_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return LW_INTERNAL_ERROR;
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw lw::InvalidArgument(std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lw_log_integral to_c(const lw::LogIntegral& li) {
  return {li.value, li.radius, li.nodes, li.floor, li.singular_nodes, li.refinement_delta};
}

lw::ExperimentSpec from_c(const lw_experiment_spec& s) {
  if (s.kind < 0 || s.kind > 3) throw lw::InvalidArgument("unknown experiment kind");
  if (s.method < 0 || s.method > 1) throw lw::InvalidArgument("unknown counting method");
  lw::ExperimentSpec out;
  out.kind = static_cast<lw::ExperimentKind>(s.kind);
  out.n = s.n;
  out.m = s.m;
  out.seed = s.seed;
  out.radius = s.radius;
  out.nodes = s.nodes;
  out.method = static_cast<lw::CountingMethod>(s.method);
  out.floor = s.floor;
  out.theta = s.theta;
  out.phi = s.phi;
  out.a = s.a;
  out.band_eps = s.band_eps;
  out.r_lo = s.r_lo;
  out.r_hi = s.r_hi;
  out.enumerate_all = s.enumerate_all != 0;
  out.bins = s.bins;
  return out;
}

lw_sample_record to_c(const lw::SampleRecord& r) { return {r.index, r.seed, r.value, r.aux, r.flags}; }

lw::SampleRecord from_c(const lw_sample_record& r) {
  lw::SampleRecord out;
  out.index = r.index;
  out.seed = r.seed;
  out.value = r.value;
  out.aux = r.aux;
  out.flags = r.flags;
  return out;
}

template <std::size_t N>
void copy_entries(const std::array<double, N>& from, double (&to)[N]) {
  std::copy(from.begin(), from.end(), to);
}

}  // namespace

extern "C" {

const char* lw_version(void) { return "1.0.0"; }

const char* lw_last_error(void) { return g_last_error.c_str(); }

void lw_string_free(char* s) { std::free(s); }

lw_status lw_poly_sample(size_t n, uint64_t seed, lw_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lw_poly{lw::sample(n, seed)};
  });
}

lw_status lw_poly_from_string(const char* signs, lw_poly** out) {
  return guarded([&] {
    require(signs, "signs");
    require(out, "out");
    *out = new lw_poly{lw::LittlewoodPoly::from_string(signs)};
  });
}

lw_status lw_poly_pattern(size_t n, uint64_t index, lw_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lw_poly{lw::pattern_at(n, index)};
  });
}

lw_status lw_poly_reverse(const lw_poly* p, lw_poly** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new lw_poly{lw::reverse(p->value)};
  });
}

void lw_poly_free(lw_poly* p) { delete p; }

size_t lw_poly_size(const lw_poly* p) { return p ? p->value.size() : 0; }

lw_status lw_poly_coeffs(const lw_poly* p, int8_t* out, size_t len) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    if (len < p->value.size()) throw lw::InvalidArgument("output buffer too small");
    std::copy(p->value.coeffs().begin(), p->value.coeffs().end(), out);
  });
}

lw_status lw_poly_to_string(const lw_poly* p, char** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = copy_string(p->value.to_string());
  });
}

lw_status lw_poly_eval(const lw_poly* p, double re, double im, double* out_re, double* out_im) {
  return guarded([&] {
    require(p, "p");
    require(out_re, "out_re");
    require(out_im, "out_im");
    const lw::Complex v = lw::eval_point(p->value, {re, im});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

lw_status lw_poly_eval_grid(const lw_poly* p, double radius, size_t nodes, double* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const lw::EvalGrid g = lw::eval_grid(p->value, radius, nodes);
    for (std::size_t j = 0; j < g.values.size(); ++j) {
      out[2 * j] = g.values[j].real();
      out[2 * j + 1] = g.values[j].imag();
    }
  });
}

lw_status lw_sigma_sq(size_t n, double radius, double* out) {
  return guarded([&] {
    require(out, "out");
    if (n == 0) throw lw::InvalidArgument("n must be at least 1");
    *out = lw::sigma_sq(n, radius);
  });
}

uint64_t lw_derive_seed(uint64_t master, uint64_t index) { return lw::derive_seed(master, index); }

lw_root_options lw_root_options_default(void) {
  const lw::RootOptions d;
  return {d.tol, d.max_iter, d.polish ? 1 : 0};
}

lw_status lw_find_roots(const lw_poly* p, const lw_root_options* options, lw_roots** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    lw::RootOptions o;
    if (options != nullptr) {
      o.tol = options->tol;
      o.max_iter = options->max_iter;
      o.polish = options->polish != 0;
    }
    *out = new lw_roots{lw::find_roots(p->value, o)};
  });
}

void lw_roots_free(lw_roots* rs) { delete rs; }

size_t lw_roots_size(const lw_roots* rs) { return rs ? rs->value.size() : 0; }

int lw_roots_iterations(const lw_roots* rs) { return rs ? rs->value.iterations : 0; }

int lw_roots_all_converged(const lw_roots* rs) { return rs && rs->value.all_converged() ? 1 : 0; }

lw_status lw_roots_get(const lw_roots* rs, size_t i, double* re, double* im, double* residual, int* converged) {
  return guarded([&] {
    require(rs, "rs");
    if (i >= rs->value.size()) throw lw::InvalidArgument("root index out of range");
    if (re) *re = rs->value.roots[i].real();
    if (im) *im = rs->value.roots[i].imag();
    if (residual) *residual = rs->value.residuals[i];
    if (converged) *converged = rs->value.converged[i] ? 1 : 0;
  });
}

lw_status lw_roots_json(const lw_roots* rs, char** out) {
  return guarded([&] {
    require(rs, "rs");
    require(out, "out");
    *out = copy_string(lw::detail::to_json(rs->value).dump());
  });
}

lw_status lw_count_in_disk(const lw_roots* rs, double band_eps, lw_disk_count* out) {
  return guarded([&] {
    require(rs, "rs");
    require(out, "out");
    const lw::DiskCount c = lw::count_in_disk(rs->value, band_eps);
    *out = {c.inside, c.boundary_band, c.outside, c.band_eps};
  });
}

lw_status lw_count_in_disk_exact(const lw_poly* p, const lw_roots* rs, double band_eps, lw_disk_count* out) {
  return guarded([&] {
    require(p, "p");
    require(rs, "rs");
    require(out, "out");
    const lw::DiskCount c = lw::count_in_disk_exact(p->value, rs->value, band_eps);
    *out = {c.inside, c.boundary_band, c.outside, c.band_eps};
  });
}

lw_status lw_unimodular_roots_exact(const lw_poly* p, size_t* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = lw::unimodular_roots_exact(p->value);
  });
}

lw_status lw_verify_residuals(const lw_poly* p, const lw_roots* rs, lw_residual_report* out) {
  return guarded([&] {
    require(p, "p");
    require(rs, "rs");
    require(out, "out");
    const lw::ResidualReport r = lw::verify_residuals(p->value, rs->value);
    *out = {r.max_residual, r.min_pair_distance, r.log_modulus_sum, r.modulus_product};
  });
}

size_t lw_default_nodes(size_t n) { return lw::default_nodes(n); }

lw_status lw_log_integral_compute(const lw_poly* p, double radius, size_t nodes, double floor, lw_log_integral* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const std::size_t n = p->value.size();
    *out = to_c(lw::log_integral(p->value, radius, nodes ? nodes : lw::default_nodes(n),
                                 floor < 0.0 ? lw::default_floor(n) : floor));
  });
}

lw_status lw_mahler(const lw_poly* p, size_t nodes, int cross_check, lw_mahler_measure* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const lw::MahlerMeasure m =
        lw::mahler(p->value, nodes ? nodes : lw::default_nodes(p->value.size()), cross_check != 0);
    *out = {m.from_integral, m.from_roots, m.roots_converged ? 1 : 0, to_c(m.integral)};
  });
}

lw_status lw_jensen_count(const lw_poly* p, double r_lo, double r_hi, size_t nodes, double* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = lw::jensen_count(p->value, r_lo, r_hi, nodes ? nodes : lw::default_nodes(p->value.size()));
  });
}

lw_status lw_normalized_log_integral(const lw_poly* p, double radius, size_t nodes, double floor, double* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const std::size_t n = p->value.size();
    *out = lw::normalized_log_integral(p->value, radius, nodes ? nodes : lw::default_nodes(n),
                                       floor < 0.0 ? lw::default_floor(n) : floor);
  });
}

lw_status lw_covariance2(size_t n, double r, double theta, lw_cov2* out) {
  return guarded([&] {
    require(out, "out");
    copy_entries(lw::covariance2(n, r, theta).entries, out->entries);
  });
}

lw_status lw_covariance4(size_t n, double r, double theta, double phi, lw_cov4* out) {
  return guarded([&] {
    require(out, "out");
    copy_entries(lw::covariance4(n, r, theta, phi).entries, out->entries);
  });
}

lw_status lw_covariance4_from_trig_sums(size_t n, double r, double theta, double phi, lw_cov4* out) {
  return guarded([&] {
    require(out, "out");
    copy_entries(lw::covariance4_from_trig_sums(n, r, theta, phi).entries, out->entries);
  });
}

lw_status lw_cov_deviation(const double* entries, size_t dim, double* out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    if (dim != 2 && dim != 4) throw lw::InvalidArgument("dim must be 2 or 4");
    *out = lw::cov_deviation(std::span<const double>(entries, dim * dim), dim);
  });
}

lw_status lw_trig_sum(size_t n, double r, double eta, lw_trig_sum_result* out) {
  return guarded([&] {
    require(out, "out");
    const lw::TrigSum t = lw::trig_sum(n, r, eta);
    *out = {t.value, t.closed_form, t.closed_form_valid ? 1 : 0};
  });
}

lw_status lw_taylor_bound_check(size_t n, double tau, lw_taylor_report* out) {
  return guarded([&] {
    require(out, "out");
    const lw::TaylorReport t = lw::taylor_bound_check(n, tau);
    *out = {t.lhs, t.bound, t.pass ? 1 : 0, t.threshold_n};
  });
}

lw_status lw_turan_check(const double* coeffs, const int64_t* freqs, size_t h, double e_lo, double e_hi,
                         size_t grid, lw_turan_report* out) {
  return guarded([&] {
    require(coeffs, "coeffs");
    require(freqs, "freqs");
    require(out, "out");
    std::vector<lw::Complex> b(h);
    for (std::size_t l = 0; l < h; ++l) b[l] = {coeffs[2 * l], coeffs[2 * l + 1]};
    const lw::TuranReport t = lw::turan_check(b, std::span<const std::int64_t>(freqs, h), e_lo, e_hi, grid);
    *out = {t.lhs_sup, t.sup_on_e, t.rhs, t.rhs_upper, t.pass ? 1 : 0, t.refined ? 1 : 0};
  });
}

lw_status lw_random_turan_instance(uint64_t seed, size_t max_h, int64_t max_freq, lw_turan_instance* out) {
  return guarded([&] {
    require(out, "out");
    if (max_h > LW_TURAN_MAX_TERMS) throw lw::InvalidArgument("max_h exceeds LW_TURAN_MAX_TERMS");
    const lw::TuranInstance t = lw::random_turan_instance(seed, max_h, max_freq);
    *out = {};
    out->h = t.coeffs.size();
    for (std::size_t l = 0; l < out->h; ++l) {
      out->coeffs[2 * l] = t.coeffs[l].real();
      out->coeffs[2 * l + 1] = t.coeffs[l].imag();
      out->freqs[l] = t.freqs[l];
    }
    out->e_lo = t.e_lo;
    out->e_hi = t.e_hi;
  });
}

lw_status lw_cdf_distance(size_t n, double r, double theta, size_t m, uint64_t seed, size_t workers,
                          lw_cdf_distance_result* out) {
  return guarded([&] {
    require(out, "out");
    const lw::CdfDistance d = lw::cdf_distance(n, r, theta, m, seed, workers);
    *out = {d.distance, d.in_regime ? 1 : 0, d.samples};
  });
}

lw_status lw_cdf_distance2(size_t n, double r, double theta, double phi, size_t m, uint64_t seed, size_t workers,
                           lw_cdf_distance_result* out) {
  return guarded([&] {
    require(out, "out");
    const lw::CdfDistance d = lw::cdf_distance2(n, r, theta, phi, m, seed, workers);
    *out = {d.distance, d.in_regime ? 1 : 0, d.samples};
  });
}

lw_status lw_normalized_power_samples(size_t n, double r, double theta, size_t m, uint64_t seed, size_t workers,
                                      double* out) {
  return guarded([&] {
    require(out, "out");
    const std::vector<double> v = lw::normalized_power_samples(n, r, theta, m, seed, workers);
    std::copy(v.begin(), v.end(), out);
  });
}

lw_status lw_small_ball(size_t n, double r, double a, size_t m, size_t nodes, uint64_t seed, size_t workers,
                        lw_small_ball_estimate* out) {
  return guarded([&] {
    require(out, "out");
    const lw::SmallBallEstimate e = lw::small_ball(n, r, a, m, nodes, seed, workers);
    *out = {e.a, e.estimate, e.std_error, e.samples, e.nodes};
  });
}

lw_experiment_spec lw_experiment_spec_default(void) {
  const lw::ExperimentSpec d;
  lw_experiment_spec s{};
  s.kind = static_cast<int>(d.kind);
  s.n = d.n;
  s.m = d.m;
  s.seed = d.seed;
  s.radius = d.radius;
  s.nodes = d.nodes;
  s.method = static_cast<int>(d.method);
  s.floor = d.floor;
  s.theta = d.theta;
  s.phi = d.phi;
  s.a = d.a;
  s.band_eps = d.band_eps;
  s.r_lo = d.r_lo;
  s.r_hi = d.r_hi;
  s.enumerate_all = d.enumerate_all ? 1 : 0;
  s.bins = d.bins;
  return s;
}

lw_status lw_parse_kind(const char* name, int* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<int>(lw::parse_kind(name));
  });
}

lw_status lw_parse_method(const char* name, int* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<int>(lw::parse_method(name));
  });
}

lw_status lw_validate_spec(const lw_experiment_spec* spec) {
  return guarded([&] {
    require(spec, "spec");
    lw::validate(from_c(*spec));
  });
}

lw_status lw_run(const lw_experiment_spec* spec, size_t workers, lw_record_callback callback, void* user,
                 lw_report** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    lw::RunOptions options;
    options.workers = workers;
    if (callback != nullptr) {
      options.on_record = [&](const lw::SampleRecord& rec) {
        const lw_sample_record c = to_c(rec);
        callback(&c, user);
      };
    }
    *out = new lw_report{lw::run(from_c(*spec), options)};
  });
}

void lw_report_free(lw_report* r) { delete r; }

double lw_report_mean(const lw_report* r) { return r ? r->value.mean : 0.0; }
double lw_report_variance(const lw_report* r) { return r ? r->value.variance : 0.0; }
double lw_report_std_error(const lw_report* r) { return r ? r->value.std_error : 0.0; }
size_t lw_report_failures(const lw_report* r) { return r ? r->value.failures : 0; }
int lw_report_degraded(const lw_report* r) { return r && r->value.degraded ? 1 : 0; }
double lw_report_wall_seconds(const lw_report* r) { return r ? r->value.wall_seconds : 0.0; }
size_t lw_report_record_count(const lw_report* r) { return r ? r->value.records.size() : 0; }
size_t lw_report_histogram_bins(const lw_report* r) { return r ? r->value.histogram.counts.size() : 0; }

lw_status lw_report_quantile(const lw_report* r, double level, double* out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    for (std::size_t q = 0; q < lw::kQuantileLevels.size(); ++q) {
      if (std::abs(lw::kQuantileLevels[q] - level) < 1e-12) {
        *out = r->value.quantiles[q];
        return;
      }
    }
    throw lw::InvalidArgument("quantile level not recorded");
  });
}

lw_status lw_report_record(const lw_report* r, size_t i, lw_sample_record* out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    if (i >= r->value.records.size()) throw lw::InvalidArgument("record index out of range");
    *out = to_c(r->value.records[i]);
  });
}

lw_status lw_report_summary(const lw_report* r, const char* key, double* out) {
  return guarded([&] {
    require(r, "r");
    require(key, "key");
    require(out, "out");
    const auto v = r->value.find(key);
    if (!v) throw lw::InvalidArgument(std::string("no summary entry '") + key + "'");
    *out = *v;
  });
}

lw_status lw_report_histogram(const lw_report* r, double* edges, size_t* counts) {
  return guarded([&] {
    require(r, "r");
    require(edges, "edges");
    require(counts, "counts");
    std::copy(r->value.histogram.edges.begin(), r->value.histogram.edges.end(), edges);
    std::copy(r->value.histogram.counts.begin(), r->value.histogram.counts.end(), counts);
  });
}

lw_status lw_report_json(const lw_report* r, int include_records, int include_wall_time, char** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    *out = copy_string(lw::detail::to_json(r->value, include_records != 0, include_wall_time != 0).dump(2));
  });
}

lw_status lw_report_csv(const lw_report* r, char** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    *out = copy_string(lw::detail::records_csv(r->value));
  });
}

lw_status lw_record_json(const lw_sample_record* rec, char** out) {
  return guarded([&] {
    require(rec, "rec");
    require(out, "out");
    *out = copy_string(lw::detail::to_json(from_c(*rec)).dump());
  });
}

lw_status lw_format_double(double x, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(lw::detail::format_double(x));
  });
}

}  // extern "C"
