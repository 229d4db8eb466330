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

// lwlab: command-line front end to the littlewood C library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "format.hpp"
#include "littlewood/littlewood.h"
#include "plot.hpp"

namespace lwlab {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegraded = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegradedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(lw_status s, const std::string& m) : std::runtime_error(m), status(s) {}
  lw_status status;
};

void check(lw_status s) {
  if (s != LW_OK) throw ApiError(s, lw_last_error());
}

struct PolyDeleter {
  void operator()(lw_poly* p) const { lw_poly_free(p); }
};
struct RootsDeleter {
  void operator()(lw_roots* r) const { lw_roots_free(r); }
};
struct ReportDeleter {
  void operator()(lw_report* r) const { lw_report_free(r); }
};
using PolyPtr = std::unique_ptr<lw_poly, PolyDeleter>;
using RootsPtr = std::unique_ptr<lw_roots, RootsDeleter>;
using ReportPtr = std::unique_ptr<lw_report, ReportDeleter>;

std::string take_string(char* s) {
  std::string out(s ? s : "");
  lw_string_free(s);
  return out;
}

struct Key {
  const char* name;
  const char* fallback;
  const char* help;
  bool flag;
};

// Every setting, its default and its help text. Config files use the same names.
const std::vector<Key>& keys() {
  static const std::vector<Key> k = {
      {"n", "64", "Number of coefficients (degree n-1)", false},
      {"m", "100", "Monte Carlo sample count; instance count for 'probes turan'", false},
      {"seed", "0", "Master seed (64-bit)", false},
      {"signs", "", "Explicit sign pattern such as ++- (overrides --n/--seed)", false},
      {"radius", "1", "Circle radius r", false},
      {"r_lo", "0.9995", "Inner Jensen radius", false},
      {"r_hi", "1.0005", "Outer Jensen radius", false},
      {"nodes", "0", "Quadrature nodes N; 0 = max(8192, 8n) rounded to a power of two", false},
      {"floor", "-1", "Log-integral floor; negative = 1/n", false},
      {"band_eps", "1e-8", "Half-width of the unit-circle band for root counts", false},
      {"theta", "1", "Angle theta", false},
      {"phi", "2", "Second angle phi", false},
      {"eta", "0.3", "Angle eta for 'probes trig'", false},
      {"tau", "0.001", "tau for 'probes taylor'", false},
      {"a", "0.1", "Small-ball level a in (0, 1/3)", false},
      {"grid", "20000", "Grid points for 'probes turan'", false},
      {"tol", "1e-12", "Root-finder tolerance on Aberth corrections", false},
      {"max_iter", "500", "Root-finder sweep limit", false},
      {"method", "roots", "Disk counting method: roots | jensen", false},
      {"kind", "concentration", "Experiment kind: concentration | mahler | clt | smallball", false},
      {"bins", "0", "Histogram bins; 0 = Freedman-Diaconis", false},
      {"enumerate", "false", "Run over all 2^n sign patterns instead of m seeds", true},
      {"records", "true", "Include per-sample records in JSON reports", false},
      {"workers", "0", "Worker threads; 0 = all cores (env LITTLEWOOD_WORKERS)", false},
      {"format", "json", "Output format: json | csv | jsonl", false},
      {"out", "", "Output path; standard output when empty", false},
      {"plot", "false", "Also write histogram/CDF CSV files and an SVG chart", true},
  };
  return k;
}

std::vector<std::string> key_names() {
  std::vector<std::string> v;
  for (const auto& k : keys()) v.push_back(k.name);
  return v;
}

class Settings {
 public:
  std::map<std::string, std::string> values;

  const std::string& str(const std::string& key) const { return values.at(key); }

  double real(const std::string& key) const {
    const std::string& s = str(key);
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("invalid number for --" + dashed(key) + ": '" + s + "'");
  }

  std::uint64_t u64(const std::string& key) const {
    const std::string& s = str(key);
    try {
      std::size_t used = 0;
      if (!s.empty() && s[0] != '-') {
        const unsigned long long v = std::stoull(s, &used, 0);
        if (used == s.size()) return v;
      }
    } catch (const std::exception&) {
    }
    throw UsageError("invalid non-negative integer for --" + dashed(key) + ": '" + s + "'");
  }

  std::size_t size(const std::string& key) const { return static_cast<std::size_t>(u64(key)); }

  bool flag(const std::string& key) const {
    const std::string& s = str(key);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw UsageError("invalid boolean for --" + dashed(key) + ": '" + s + "'");
  }

  static std::string dashed(std::string key) {
    for (char& c : key) c = c == '_' ? '-' : c;
    return key;
  }
};

class Output {
 public:
  explicit Output(const Settings& s) : path_(s.str("out")) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    if (!file_.is_open()) {
      file_.open(path_, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path_ + "'");
    }
    file_ << text;
    file_.flush();
  }

  std::string plot_prefix() const {
    if (path_.empty()) return "lwlab";
    const auto slash = path_.find_last_of('/');
    const auto dot = path_.find_last_of('.');
    return (dot != std::string::npos && (slash == std::string::npos || dot > slash)) ? path_.substr(0, dot) : path_;
  }

 private:
  std::string path_;
  std::ofstream file_;
};

std::string format_of(const Settings& s) {
  const std::string f = s.str("format");
  if (f != "json" && f != "csv" && f != "jsonl") throw UsageError("--format must be json, csv or jsonl");
  return f;
}

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "nan";
  return v.dump();
}

// Flattens nested objects and arrays into dotted column names.
void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

std::string one_row_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  std::string head, row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    head += (i ? "," : "") + cells[i].first;
    row += (i ? "," : "") + cells[i].second;
  }
  return head + "\n" + row + "\n";
}

void emit(Output& out, const Settings& s, const Json& j) {
  const std::string f = format_of(s);
  if (f == "json") {
    out.write(j.dump(2) + "\n");
  } else if (f == "jsonl") {
    out.write(j.dump() + "\n");
  } else {
    out.write(one_row_csv(j));
  }
}

PolyPtr make_poly(const Settings& s) {
  lw_poly* p = nullptr;
  if (!s.str("signs").empty()) {
    check(lw_poly_from_string(s.str("signs").c_str(), &p));
  } else {
    check(lw_poly_sample(s.size("n"), s.u64("seed"), &p));
  }
  return PolyPtr(p);
}

std::string signs_of(const lw_poly* p) {
  char* text = nullptr;
  check(lw_poly_to_string(p, &text));
  return take_string(text);
}

Json poly_header(const Settings& s, const lw_poly* p) {
  Json j;
  j["n"] = lw_poly_size(p);
  if (s.str("signs").empty()) j["seed"] = s.u64("seed");
  j["signs"] = signs_of(p);
  return j;
}

RootsPtr roots_of(const Settings& s, const lw_poly* p) {
  lw_root_options o = lw_root_options_default();
  o.tol = s.real("tol");
  o.max_iter = static_cast<int>(s.size("max_iter"));
  lw_roots* rs = nullptr;
  check(lw_find_roots(p, &o, &rs));
  return RootsPtr(rs);
}

int cmd_sample(const Settings& s, Output& out) {
  const PolyPtr p = make_poly(s);
  emit(out, s, poly_header(s, p.get()));
  return kExitOk;
}

int cmd_roots(const Settings& s, Output& out) {
  const PolyPtr p = make_poly(s);
  const RootsPtr rs = roots_of(s, p.get());
  lw_residual_report rep{};
  check(lw_verify_residuals(p.get(), rs.get(), &rep));
  if (format_of(s) == "csv") {
    std::string text = "re,im,residual,converged\n";
    for (std::size_t i = 0; i < lw_roots_size(rs.get()); ++i) {
      double re = 0, im = 0, res = 0;
      int conv = 0;
      check(lw_roots_get(rs.get(), i, &re, &im, &res, &conv));
      text += format_double(re) + ',' + format_double(im) + ',' + format_double(res) + ',' + std::to_string(conv) + '\n';
    }
    out.write(text);
  } else {
    Json j = poly_header(s, p.get());
    char* text = nullptr;
    check(lw_roots_json(rs.get(), &text));
    const Json body = Json::parse(take_string(text));
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    j["verify"] = {{"max_residual", rep.max_residual},
                   {"min_pair_distance", rep.min_pair_distance},
                   {"log_modulus_sum", rep.log_modulus_sum},
                   {"modulus_product", rep.modulus_product}};
    emit(out, s, j);
  }
  if (!lw_roots_all_converged(rs.get())) throw DegradedError("root iteration did not converge for every root");
  return kExitOk;
}

int cmd_count(const Settings& s, Output& out) {
  const PolyPtr p = make_poly(s);
  Json j = poly_header(s, p.get());
  std::size_t unimodular = 0;
  check(lw_unimodular_roots_exact(p.get(), &unimodular));
  j["band_eps"] = s.real("band_eps");
  j["unimodular_exact"] = unimodular;
  if (lw_poly_size(p.get()) == 1) {
    j["inside"] = j["boundary_band"] = j["outside"] = 0;
    j["symmetric_count"] = 0.0;
    emit(out, s, j);
    return kExitOk;
  }
  const RootsPtr rs = roots_of(s, p.get());
  lw_disk_count plain{}, exact{};
  check(lw_count_in_disk(rs.get(), s.real("band_eps"), &plain));
  check(lw_count_in_disk_exact(p.get(), rs.get(), s.real("band_eps"), &exact));
  j["inside"] = plain.inside;
  j["boundary_band"] = plain.boundary_band;
  j["outside"] = plain.outside;
  j["exact_split"] = {{"inside", exact.inside}, {"boundary_band", exact.boundary_band}, {"outside", exact.outside}};
  j["symmetric_count"] = double(exact.inside) + 0.5 * double(exact.boundary_band);
  emit(out, s, j);
  return kExitOk;
}

Json log_integral_json(const lw_log_integral& li) {
  return {{"value", li.value},
          {"radius", li.radius},
          {"nodes", li.nodes},
          {"floor", li.floor},
          {"singular_nodes", li.singular_nodes},
          {"refinement_delta", li.refinement_delta}};
}

int cmd_mahler(const Settings& s, Output& out) {
  const PolyPtr p = make_poly(s);
  lw_mahler_measure m{};
  check(lw_mahler(p.get(), s.size("nodes"), 1, &m));
  Json j = poly_header(s, p.get());
  j["M"] = m.from_integral;
  j["M_roots"] = m.from_roots;
  j["roots_converged"] = m.roots_converged != 0;
  j["log_integral"] = log_integral_json(m.integral);
  emit(out, s, j);
  if (!m.roots_converged) throw DegradedError("root cross-check did not converge");
  return kExitOk;
}

int cmd_logint(const Settings& s, Output& out) {
  const PolyPtr p = make_poly(s);
  lw_log_integral li{};
  check(lw_log_integral_compute(p.get(), s.real("radius"), s.size("nodes"), s.real("floor"), &li));
  double sigma2 = 0.0;
  check(lw_sigma_sq(lw_poly_size(p.get()), li.radius, &sigma2));
  Json j = poly_header(s, p.get());
  j["log_integral"] = log_integral_json(li);
  j["normalized_value"] = li.value - 0.5 * std::log(sigma2);
  emit(out, s, j);
  return kExitOk;
}

int cmd_jensen(const Settings& s, Output& out) {
  const PolyPtr p = make_poly(s);
  double count = 0.0;
  const std::size_t nodes = s.size("nodes") ? s.size("nodes") : lw_default_nodes(lw_poly_size(p.get()));
  check(lw_jensen_count(p.get(), s.real("r_lo"), s.real("r_hi"), nodes, &count));
  Json j = poly_header(s, p.get());
  j["r_lo"] = s.real("r_lo");
  j["r_hi"] = s.real("r_hi");
  j["nodes"] = nodes;
  j["jensen_count"] = count;
  emit(out, s, j);
  return kExitOk;
}

std::size_t workers_of(const Settings& s, bool given) {
  if (!given) {
    if (const char* env = std::getenv("LITTLEWOOD_WORKERS")) {
      Settings tmp;
      tmp.values["workers"] = env;
      return tmp.size("workers");
    }
  }
  return s.size("workers");
}

lw_experiment_spec spec_of(const Settings& s, const std::string& kind) {
  lw_experiment_spec spec = lw_experiment_spec_default();
  check(lw_parse_kind(kind.c_str(), &spec.kind));
  check(lw_parse_method(s.str("method").c_str(), &spec.method));
  spec.n = s.size("n");
  spec.m = s.size("m");
  spec.seed = s.u64("seed");
  spec.radius = s.real("radius");
  spec.nodes = s.size("nodes");
  spec.floor = s.real("floor");
  spec.theta = s.real("theta");
  spec.phi = s.real("phi");
  spec.a = s.real("a");
  spec.band_eps = s.real("band_eps");
  spec.r_lo = s.real("r_lo");
  spec.r_hi = s.real("r_hi");
  spec.enumerate_all = s.flag("enumerate") ? 1 : 0;
  spec.bins = s.size("bins");
  return spec;
}

struct StreamState {
  Output* out;
  std::string error;
};

void stream_record(const lw_sample_record* rec, void* user) {
  auto* st = static_cast<StreamState*>(user);
  char* text = nullptr;
  if (lw_record_json(rec, &text) != LW_OK) {
    st->error = lw_last_error();
    return;
  }
  st->out->write(take_string(text) + "\n");
}

void write_report_plot(const Settings& s, const Output& out, const lw_report* r, const std::string& kind) {
  PlotData d;
  d.title = kind + " experiment, n = " + s.str("n");
  const std::size_t bins = lw_report_histogram_bins(r);
  d.edges.resize(bins + 1);
  d.counts.resize(bins);
  if (bins) check(lw_report_histogram(r, d.edges.data(), d.counts.data()));
  for (std::size_t i = 0; i < lw_report_record_count(r); ++i) {
    lw_sample_record rec{};
    check(lw_report_record(r, i, &rec));
    d.samples.push_back(rec.value);
  }
  if (kind == "clt") {
    d.x_label = "|P~(r e^{i theta})|^2";
    d.reference_cdf = [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x); };
    d.reference_label = "1 - exp(-x)";
  } else if (kind == "mahler") {
    d.x_label = "normalized log-integral";
  } else if (kind == "concentration") {
    d.x_label = "nu(D) - n/2";
  } else {
    d.x_label = "fraction of nodes with |P| <= a";
  }
  for (const auto& path : write_plot_files(out.plot_prefix(), d)) std::cerr << "I: wrote " << path << "\n";
}

int cmd_run(const Settings& s, Output& out, const std::string& kind, bool workers_given) {
  const lw_experiment_spec spec = spec_of(s, kind);
  check(lw_validate_spec(&spec));
  const std::string fmt = format_of(s);
  StreamState st{&out, {}};
  lw_report* raw = nullptr;
  check(lw_run(&spec, workers_of(s, workers_given), fmt == "jsonl" ? stream_record : nullptr, &st, &raw));
  const ReportPtr r(raw);
  if (!st.error.empty()) throw ApiError(LW_INTERNAL_ERROR, st.error);
  std::cerr << "I: wall_seconds=" << format_double(lw_report_wall_seconds(r.get())) << "\n";

  char* text = nullptr;
  if (fmt == "json") {
    check(lw_report_json(r.get(), s.flag("records") ? 1 : 0, 0, &text));
    out.write(take_string(text) + "\n");
  } else if (fmt == "jsonl") {
    check(lw_report_json(r.get(), 0, 0, &text));
    Json summary = Json::parse(take_string(text));
    summary["type"] = "summary";
    out.write(summary.dump() + "\n");
  } else {
    check(lw_report_csv(r.get(), &text));
    out.write(take_string(text));
  }
  if (s.flag("plot")) write_report_plot(s, out, r.get(), kind);
  if (lw_report_degraded(r.get())) {
    throw DegradedError(std::to_string(lw_report_failures(r.get())) + " of " +
                        std::to_string(lw_report_record_count(r.get())) + " samples failed to converge");
  }
  return kExitOk;
}

int cmd_cov(const Settings& s, Output& out) {
  const std::size_t n = s.size("n");
  const double r = s.real("radius"), theta = s.real("theta"), phi = s.real("phi");
  lw_cov2 v2{};
  lw_cov4 v4{}, t4{};
  check(lw_covariance2(n, r, theta, &v2));
  check(lw_covariance4(n, r, theta, phi, &v4));
  check(lw_covariance4_from_trig_sums(n, r, theta, phi, &t4));
  double d2 = 0, d4 = 0, path_diff = 0;
  check(lw_cov_deviation(v2.entries, 2, &d2));
  check(lw_cov_deviation(v4.entries, 4, &d4));
  for (int k = 0; k < 16; ++k) path_diff = std::max(path_diff, std::abs(v4.entries[k] - t4.entries[k]));
  Json j;
  j["n"] = n;
  j["radius"] = r;
  j["theta"] = theta;
  j["phi"] = phi;
  j["cov2"] = std::vector<double>(v2.entries, v2.entries + 4);
  j["cov2_deviation"] = d2;
  j["cov4"] = std::vector<double>(v4.entries, v4.entries + 16);
  j["cov4_deviation"] = d4;
  j["cov4_trig_path_max_diff"] = path_diff;
  j["bound_10_over_sqrt_n"] = 10.0 / std::sqrt(double(n));
  emit(out, s, j);
  return kExitOk;
}

int cmd_trig(const Settings& s, Output& out) {
  const std::size_t n = s.size("n");
  lw_trig_sum_result t{};
  check(lw_trig_sum(n, s.real("radius"), s.real("eta"), &t));
  Json j;
  j["n"] = n;
  j["radius"] = s.real("radius");
  j["eta"] = s.real("eta");
  j["value"] = t.value;
  j["closed_form"] = t.closed_form_valid ? Json(t.closed_form) : Json(nullptr);
  j["closed_form_valid"] = t.closed_form_valid != 0;
  j["value_times_sqrt_n"] = t.value * std::sqrt(double(n));
  emit(out, s, j);
  return kExitOk;
}

int cmd_taylor(const Settings& s, Output& out) {
  lw_taylor_report t{};
  check(lw_taylor_bound_check(s.size("n"), s.real("tau"), &t));
  Json j;
  j["n"] = s.size("n");
  j["tau"] = s.real("tau");
  j["lhs"] = t.lhs;
  j["bound"] = t.bound;
  j["pass"] = t.pass != 0;
  j["threshold_n"] = t.threshold_n;
  emit(out, s, j);
  return kExitOk;
}

int cmd_turan(const Settings& s, Output& out) {
  const std::size_t count = s.size("m");
  const std::uint64_t seed = s.u64("seed");
  std::size_t passed = 0, refined = 0;
  double worst_ratio = 0.0;
  Json reports = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    lw_turan_instance inst{};
    check(lw_random_turan_instance(lw_derive_seed(seed, i), 5, 50, &inst));
    lw_turan_report rep{};
    check(lw_turan_check(inst.coeffs, inst.freqs, inst.h, inst.e_lo, inst.e_hi, s.size("grid"), &rep));
    passed += rep.pass ? 1 : 0;
    refined += rep.refined ? 1 : 0;
    worst_ratio = std::max(worst_ratio, rep.lhs_sup / rep.rhs_upper);
    reports.push_back({{"h", inst.h},
                       {"e_lo", inst.e_lo},
                       {"e_hi", inst.e_hi},
                       {"lhs_sup", rep.lhs_sup},
                       {"rhs", rep.rhs},
                       {"rhs_upper", rep.rhs_upper},
                       {"pass", rep.pass != 0}});
  }
  Json j;
  j["instances"] = count;
  j["seed"] = seed;
  j["grid"] = s.size("grid");
  j["passed"] = passed;
  j["refined"] = refined;
  j["max_lhs_over_rhs"] = worst_ratio;
  if (format_of(s) != "csv") j["reports"] = reports;
  emit(out, s, j);
  if (passed != count) throw DegradedError(std::to_string(count - passed) + " Turan instances violated the bound");
  return kExitOk;
}

}  // namespace
}  // namespace lwlab

int main(int argc, char** argv) {
  using namespace lwlab;
  CLI::App app{"lwlab: random Littlewood polynomial laboratory"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", lw_version());

  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;
  std::string config_path;
  app.add_option("--config", config_path, "Config file of 'key = value' lines; flags override it");
  for (const auto& k : keys()) {
    const std::string dashed = Settings::dashed(k.name);
    const std::string help = std::string(k.help) + " [default: " + (*k.fallback ? k.fallback : "\"\"") + "]";
    if (k.flag) {
      opts[k.name] = app.add_flag("--" + dashed + "{true}", raw[k.name], help);
    } else {
      opts[k.name] = app.add_option("--" + dashed, raw[k.name], help);
    }
  }

  auto add = [&](const std::string& name, const std::string& desc, CLI::App* parent) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };
  add("sample", "Draw a random sign pattern", &app);
  add("roots", "All roots with residuals", &app);
  add("count", "Roots inside, on and outside the unit circle", &app);
  add("mahler", "Mahler measure by log-integral and by roots", &app);
  add("logint", "Circle average of log|P| at --radius", &app);
  add("jensen", "Radially averaged root count between --r-lo and --r-hi", &app);
  add("clt", "Kolmogorov distance of |P~|^2 to 1 - exp(-x)", &app);
  add("smallball", "Small-ball probability estimate", &app);
  CLI::App* probes = add("probes", "Proof-internal quantities", &app);
  probes->require_subcommand(1);
  add("cov", "Covariance matrices V(theta) and V(theta, phi)", probes);
  add("trig", "Normalized weighted exponential sum at --eta", probes);
  add("taylor", "Taylor bound for log sigma at --tau", probes);
  add("turan", "Turan inequality on --m random instances", probes);
  add("experiment", "Monte Carlo experiment of --kind", &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << lw_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "E: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string chosen;
  for (CLI::App* sub : app.get_subcommands()) {
    chosen = sub->get_name();
    for (CLI::App* inner : sub->get_subcommands()) chosen += " " + inner->get_name();
  }

  try {
    Settings s;
    for (const auto& k : keys()) s.values[k.name] = k.fallback;
    if (!config_path.empty()) {
      const Config cfg = load_config(config_path, key_names());
      for (const auto& w : cfg.warnings) std::cerr << "W: " << config_path << ": " << w << "\n";
      for (const auto& [key, value] : cfg.values) s.values[key] = value;
    }
    for (const auto& [name, opt] : opts) {
      if (opt->count() > 0) s.values[name] = raw[name];
    }

    Output out(s);
    if (chosen == "sample") return cmd_sample(s, out);
    if (chosen == "roots") return cmd_roots(s, out);
    if (chosen == "count") return cmd_count(s, out);
    if (chosen == "mahler") return cmd_mahler(s, out);
    if (chosen == "logint") return cmd_logint(s, out);
    if (chosen == "jensen") return cmd_jensen(s, out);
    const bool workers_given = opts["workers"]->count() > 0 || s.values["workers"] != "0";
    if (chosen == "clt") return cmd_run(s, out, "clt", workers_given);
    if (chosen == "smallball") return cmd_run(s, out, "smallball", workers_given);
    if (chosen == "experiment") return cmd_run(s, out, s.str("kind"), workers_given);
    if (chosen == "probes cov") return cmd_cov(s, out);
    if (chosen == "probes trig") return cmd_trig(s, out);
    if (chosen == "probes taylor") return cmd_taylor(s, out);
    if (chosen == "probes turan") return cmd_turan(s, out);
    std::cerr << "E: no subcommand\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "E: " << config_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "E: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegradedError& e) {
    std::cerr << "E: numerical degradation: " << e.what() << "\n";
    return kExitDegraded;
  } catch (const ApiError& e) {
    std::cerr << "E: " << e.what() << "\n";
    if (e.status == LW_INVALID_ARGUMENT) return kExitUsage;
    if (e.status == LW_NOT_CONVERGED) return kExitDegraded;
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "E: " << e.what() << "\n";
    return kExitInternal;
  }
}
