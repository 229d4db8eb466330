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

/* C interface to the Littlewood polynomial laboratory.
 *
 * Every fallible call returns an lw_status. On failure the message is available
 * from lw_last_error() on the same thread until the next failing call.
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings handed out by the library are released with
 * lw_string_free.
 */

#ifndef LITTLEWOOD_LITTLEWOOD_H_
#define LITTLEWOOD_LITTLEWOOD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LITTLEWOOD_BUILDING)
#define LW_API __declspec(dllexport)
#else
#define LW_API __declspec(dllimport)
#endif
#else
#define LW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lw_status {
  LW_OK = 0,
  LW_INVALID_ARGUMENT = 1,
  LW_NOT_CONVERGED = 2,
  LW_INTERNAL_ERROR = 3
} lw_status;

typedef struct lw_poly lw_poly;
typedef struct lw_roots lw_roots;
typedef struct lw_report lw_report;

LW_API const char* lw_version(void);
LW_API const char* lw_last_error(void);
LW_API void lw_string_free(char* s);

/* ---- polynomials ---- */

LW_API lw_status lw_poly_sample(size_t n, uint64_t seed, lw_poly** out);
/* '+'/'-' characters, index 0 first. */
LW_API lw_status lw_poly_from_string(const char* signs, lw_poly** out);
/* Pattern number index of length n in lexicographic order, '+' before '-'. */
LW_API lw_status lw_poly_pattern(size_t n, uint64_t index, lw_poly** out);
LW_API lw_status lw_poly_reverse(const lw_poly* p, lw_poly** out);
LW_API void lw_poly_free(lw_poly* p);

LW_API size_t lw_poly_size(const lw_poly* p);
LW_API lw_status lw_poly_coeffs(const lw_poly* p, int8_t* out, size_t len);
LW_API lw_status lw_poly_to_string(const lw_poly* p, char** out);

LW_API lw_status lw_poly_eval(const lw_poly* p, double re, double im, double* out_re, double* out_im);
/* out receives 2 * nodes doubles: re, im of P(r exp(2 pi i j / nodes)). */
LW_API lw_status lw_poly_eval_grid(const lw_poly* p, double radius, size_t nodes, double* out);
LW_API lw_status lw_sigma_sq(size_t n, double radius, double* out);

LW_API uint64_t lw_derive_seed(uint64_t master, uint64_t index);

/* ---- roots ---- */

typedef struct lw_root_options {
  double tol;
  int max_iter;
  int polish;
} lw_root_options;

typedef struct lw_disk_count {
  size_t inside;
  size_t boundary_band;
  size_t outside;
  double band_eps;
} lw_disk_count;

typedef struct lw_residual_report {
  double max_residual;
  double min_pair_distance;
  double log_modulus_sum;
  double modulus_product;
} lw_residual_report;

LW_API lw_root_options lw_root_options_default(void);
/* options may be NULL. Non-convergence is reported per root, not as an error. */
LW_API lw_status lw_find_roots(const lw_poly* p, const lw_root_options* options, lw_roots** out);
LW_API void lw_roots_free(lw_roots* rs);
LW_API size_t lw_roots_size(const lw_roots* rs);
LW_API int lw_roots_iterations(const lw_roots* rs);
LW_API int lw_roots_all_converged(const lw_roots* rs);
LW_API lw_status lw_roots_get(const lw_roots* rs, size_t i, double* re, double* im, double* residual,
                              int* converged);
/* {"roots": [[re, im, residual], ...], ...} */
LW_API lw_status lw_roots_json(const lw_roots* rs, char** out);

/* Returns LW_NOT_CONVERGED for a partial root set. */
LW_API lw_status lw_count_in_disk(const lw_roots* rs, double band_eps, lw_disk_count* out);
LW_API lw_status lw_count_in_disk_exact(const lw_poly* p, const lw_roots* rs, double band_eps, lw_disk_count* out);
LW_API lw_status lw_unimodular_roots_exact(const lw_poly* p, size_t* out);
LW_API lw_status lw_verify_residuals(const lw_poly* p, const lw_roots* rs, lw_residual_report* out);

/* ---- logarithmic integrals ---- */

typedef struct lw_log_integral {
  double value;
  double radius;
  size_t nodes;
  double floor;
  size_t singular_nodes;
  double refinement_delta;
} lw_log_integral;

typedef struct lw_mahler_measure {
  double from_integral;
  double from_roots;
  int roots_converged;
  lw_log_integral integral;
} lw_mahler_measure;

LW_API size_t lw_default_nodes(size_t n);
/* nodes = 0 picks lw_default_nodes(n); a negative floor picks 1 / n. */
LW_API lw_status lw_log_integral_compute(const lw_poly* p, double radius, size_t nodes, double floor,
                                         lw_log_integral* out);
LW_API lw_status lw_mahler(const lw_poly* p, size_t nodes, int cross_check, lw_mahler_measure* out);
LW_API lw_status lw_jensen_count(const lw_poly* p, double r_lo, double r_hi, size_t nodes, double* out);
LW_API lw_status lw_normalized_log_integral(const lw_poly* p, double radius, size_t nodes, double floor,
                                            double* out);

/* ---- probes ---- */

typedef struct lw_cov2 {
  double entries[4];
} lw_cov2;

typedef struct lw_cov4 {
  double entries[16];
} lw_cov4;

typedef struct lw_trig_sum_result {
  double value;
  double closed_form;
  int closed_form_valid;
} lw_trig_sum_result;

typedef struct lw_taylor_report {
  double lhs;
  double bound;
  int pass;
  uint64_t threshold_n;
} lw_taylor_report;

typedef struct lw_turan_report {
  double lhs_sup;
  double sup_on_e;
  double rhs;
  double rhs_upper;
  int pass;
  int refined;
} lw_turan_report;

#define LW_TURAN_MAX_TERMS 64

typedef struct lw_turan_instance {
  size_t h;
  double coeffs[2 * LW_TURAN_MAX_TERMS]; /* re, im pairs */
  int64_t freqs[LW_TURAN_MAX_TERMS];
  double e_lo;
  double e_hi;
} lw_turan_instance;

typedef struct lw_cdf_distance_result {
  double distance;
  int in_regime;
  size_t samples;
} lw_cdf_distance_result;

typedef struct lw_small_ball_estimate {
  double a;
  double estimate;
  double std_error;
  size_t samples;
  size_t nodes;
} lw_small_ball_estimate;

LW_API lw_status lw_covariance2(size_t n, double r, double theta, lw_cov2* out);
LW_API lw_status lw_covariance4(size_t n, double r, double theta, double phi, lw_cov4* out);
LW_API lw_status lw_covariance4_from_trig_sums(size_t n, double r, double theta, double phi, lw_cov4* out);
/* dim is 2 or 4; entries row-major. */
LW_API lw_status lw_cov_deviation(const double* entries, size_t dim, double* out);
LW_API lw_status lw_trig_sum(size_t n, double r, double eta, lw_trig_sum_result* out);
LW_API lw_status lw_taylor_bound_check(size_t n, double tau, lw_taylor_report* out);
/* coeffs holds h (re, im) pairs. */
LW_API lw_status lw_turan_check(const double* coeffs, const int64_t* freqs, size_t h, double e_lo, double e_hi,
                                size_t grid, lw_turan_report* out);
LW_API lw_status lw_random_turan_instance(uint64_t seed, size_t max_h, int64_t max_freq, lw_turan_instance* out);
LW_API lw_status lw_cdf_distance(size_t n, double r, double theta, size_t m, uint64_t seed, size_t workers,
                                 lw_cdf_distance_result* out);
LW_API lw_status lw_cdf_distance2(size_t n, double r, double theta, double phi, size_t m, uint64_t seed,
                                  size_t workers, lw_cdf_distance_result* out);
/* out receives m values of |P~(r e^{i theta})|^2. */
LW_API lw_status lw_normalized_power_samples(size_t n, double r, double theta, size_t m, uint64_t seed,
                                             size_t workers, double* out);
LW_API lw_status lw_small_ball(size_t n, double r, double a, size_t m, size_t nodes, uint64_t seed, size_t workers,
                               lw_small_ball_estimate* out);

/* ---- Monte Carlo ---- */

typedef enum lw_experiment_kind {
  LW_KIND_CONCENTRATION = 0,
  LW_KIND_MAHLER = 1,
  LW_KIND_CLT = 2,
  LW_KIND_SMALLBALL = 3
} lw_experiment_kind;

typedef enum lw_counting_method { LW_METHOD_ROOTS = 0, LW_METHOD_JENSEN = 1 } lw_counting_method;

typedef enum lw_sample_flag {
  LW_FLAG_NOT_CONVERGED = 1,
  LW_FLAG_FALLBACK_JENSEN = 2,
  LW_FLAG_FRACTIONAL_JENSEN = 4,
  LW_FLAG_SINGULAR_NODES = 8,
  LW_FLAG_REFINEMENT_LARGE = 16,
  LW_FLAG_REGIME_VIOLATION = 32
} lw_sample_flag;

/* Zero nodes, negative floor and non-positive r_lo / r_hi select defaults. */
typedef struct lw_experiment_spec {
  int kind;
  size_t n;
  size_t m;
  uint64_t seed;
  double radius;
  size_t nodes;
  int method;
  double floor;
  double theta;
  double phi;
  double a;
  double band_eps;
  double r_lo;
  double r_hi;
  int enumerate_all;
  size_t bins;
} lw_experiment_spec;

typedef struct lw_sample_record {
  uint64_t index;
  uint64_t seed;
  double value;
  double aux;
  uint32_t flags;
} lw_sample_record;

typedef void (*lw_record_callback)(const lw_sample_record* record, void* user);

LW_API lw_experiment_spec lw_experiment_spec_default(void);
LW_API lw_status lw_parse_kind(const char* name, int* out);
LW_API lw_status lw_parse_method(const char* name, int* out);
LW_API lw_status lw_validate_spec(const lw_experiment_spec* spec);

/* workers = 0 uses every core. callback (may be NULL) sees records in index order. */
LW_API lw_status lw_run(const lw_experiment_spec* spec, size_t workers, lw_record_callback callback, void* user,
                        lw_report** out);
LW_API void lw_report_free(lw_report* r);

LW_API double lw_report_mean(const lw_report* r);
LW_API double lw_report_variance(const lw_report* r);
LW_API double lw_report_std_error(const lw_report* r);
/* level in {0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99}. */
LW_API lw_status lw_report_quantile(const lw_report* r, double level, double* out);
LW_API size_t lw_report_failures(const lw_report* r);
LW_API int lw_report_degraded(const lw_report* r);
LW_API double lw_report_wall_seconds(const lw_report* r);
LW_API size_t lw_report_record_count(const lw_report* r);
LW_API lw_status lw_report_record(const lw_report* r, size_t i, lw_sample_record* out);
LW_API lw_status lw_report_summary(const lw_report* r, const char* key, double* out);
LW_API size_t lw_report_histogram_bins(const lw_report* r);
/* edges receives bins + 1 values, counts receives bins values. */
LW_API lw_status lw_report_histogram(const lw_report* r, double* edges, size_t* counts);

LW_API lw_status lw_report_json(const lw_report* r, int include_records, int include_wall_time, char** out);
LW_API lw_status lw_report_csv(const lw_report* r, char** out);
LW_API lw_status lw_record_json(const lw_sample_record* rec, char** out);

/* Shortest round-trip decimal form of x. */
LW_API lw_status lw_format_double(double x, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LITTLEWOOD_LITTLEWOOD_H_ */
