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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "littlewood/logint.hpp"
#include "littlewood/mc.hpp"
#include "littlewood/poly.hpp"
#include "littlewood/probes.hpp"
#include "littlewood/rng.hpp"
#include "littlewood/roots.hpp"
#include "serialize.hpp"

namespace {

using namespace lw;

constexpr double kGamma = 0.57721566490153286061;

struct Gate {
  int failed = 0;
  void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %2d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Canonical bytes of a run: every record and aggregate, no timing.
std::string fingerprint(const RunReport& r) { return detail::to_json(r, true, false).dump(); }

RunReport run_with(const ExperimentSpec& spec, std::size_t workers) {
  RunOptions o;
  o.workers = workers;
  return run(spec, o);
}

ExperimentSpec concentration_spec() {
  ExperimentSpec s;
  s.kind = ExperimentKind::kConcentration;
  s.n = 256;
  s.m = 1000;
  s.seed = 1;
  return s;
}

ExperimentSpec mahler_spec(std::size_t n) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kMahler;
  s.n = n;
  s.m = 2000;
  s.seed = 1;
  s.floor = 1.0 / double(n);
  s.nodes = std::max<std::size_t>(8192, 8 * n);
  return s;
}

ExperimentSpec clt_spec(std::size_t n) {
  ExperimentSpec s;
  s.kind = ExperimentKind::kClt;
  s.n = n;
  s.m = 5000;
  s.seed = 1;
  s.radius = 1.0;
  s.theta = 1.0;
  return s;
}

}  // namespace

int main() {
  Gate gate;
  const auto t0 = std::chrono::steady_clock::now();
  std::map<int, std::vector<std::pair<ExperimentSpec, std::string>>> reference_runs;

  // 1. Root-count concentration.
  {
    const ExperimentSpec spec = concentration_spec();
    const RunReport r = run_with(spec, 1);
    reference_runs[1].emplace_back(spec, fingerprint(r));
    const double mean_fraction = *r.find("mean_nu_over_n");
    const double within = *r.find("fraction_within_n_pow_0_9");
    gate.report(1, mean_fraction >= 0.48 && mean_fraction <= 0.52 && within >= 0.99,
                "concentration n=256 m=1000: mean nu/n in [0.48, 0.52], >= 99% within n^0.9",
                fmt("mean nu/n = %.6f, within = %.4f, failures = %zu", mean_fraction, within, r.failures));
  }

  // 2-4. Mahler statistics share one run.
  {
    const ExperimentSpec spec = mahler_spec(1024);
    const RunReport r = run_with(spec, 1);
    reference_runs[2].emplace_back(spec, fingerprint(r));
    const double target = -kGamma / 2.0;
    const double mean = r.mean;

    const RunReport small = run_with(mahler_spec(64), 1);
    const RunReport large = run_with(mahler_spec(4096), 1);
    const bool approach = std::abs(large.mean - target) < std::abs(small.mean - target);
    gate.report(2, std::abs(mean - target) <= 0.03, "Mahler mean n=1024 m=2000 within 0.03 of -0.288608",
                fmt("mean = %.6f, |diff| = %.2e; screen n=64 -> %.6f, n=4096 -> %.6f%s", mean,
                    std::abs(mean - target), small.mean, large.mean,
                    approach ? "" : " (WARNING: n=4096 not closer than n=64)"));

    const double second = *r.find("second_moment");
    gate.report(3, std::abs(second - 0.083312) <= 0.03 && r.variance <= 0.03,
                "Mahler second moment within 0.03 of 0.083312, variance <= 0.03",
                fmt("second moment = %.6f, variance = %.3e", second, r.variance));

    const double median = *r.find("median_m_over_sqrt_n");
    gate.report(4, std::abs(median - 0.74931) <= 0.05, "median M/sqrt(n) within 0.05 of 0.74931",
                fmt("median = %.6f", median));
  }

  // 5. CLT distance.
  {
    const ExperimentSpec big = clt_spec(4096);
    const ExperimentSpec small = clt_spec(64);
    const RunReport rb = run_with(big, 1);
    const RunReport rs = run_with(small, 1);
    reference_runs[5].emplace_back(big, fingerprint(rb));
    reference_runs[5].emplace_back(small, fingerprint(rs));
    const double kb = *rb.find("ks_distance");
    const double ks = *rs.find("ks_distance");
    gate.report(5, kb <= 0.05 && kb < ks, "KS distance n=4096 m=5000 <= 0.05 and below n=64",
                fmt("n=4096: %.5f, n=64: %.5f", kb, ks));
  }

  // 6. Counting paths.
  {
    std::size_t compared = 0, flagged = 0, mismatches = 0;
    for (std::size_t n : {8, 16, 32, 64}) {
      for (std::uint64_t s = 0; s < 100; ++s) {
        const LittlewoodPoly p = sample(n, derive_seed(6, s));
        const CountComparison c = compare_counting_paths(p, 1.0 - 5e-4, 1.0 + 5e-4, default_nodes(n), 1e-8);
        if (c.flagged || !c.roots_converged) {
          ++flagged;
          continue;
        }
        ++compared;
        mismatches += std::round(c.jensen_count) == c.roots_count ? 0 : 1;
      }
    }
    gate.report(6, mismatches == 0 && compared > 0, "rounded jensen count equals roots count on unflagged samples",
                fmt("n in {8,16,32,64} x 100 seeds: compared %zu, flagged %zu, mismatches %zu", compared, flagged,
                    mismatches));
  }

  // 7. Reversal bijection.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 12; ++n) {
      std::size_t inside = 0, outside = 0;
      enumerate(n, [&](const LittlewoodPoly& p) {
        if (n == 1) return;
        const RootSet rs = find_roots(p);
        const DiskCount dc = count_in_disk_exact(p, rs, 1e-8);
        inside += dc.inside;
        outside += dc.outside;
      });
      ok = ok && inside == outside;
      if (n >= 10) detail += fmt("n=%zu: %zu/%zu ", n, inside, outside);
    }
    gate.report(7, ok, "full enumeration n<=12: total inside equals total outside", detail + "(inside/outside)");
  }

  // 8. Two-path Mahler.
  {
    double worst = 0.0;
    std::size_t unconverged = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const std::size_t n = 2 + derive_seed(8, s) % 511;
      const MahlerMeasure m = mahler(sample(n, derive_seed(88, s)), default_nodes(n), true);
      unconverged += m.roots_converged ? 0 : 1;
      worst = std::max(worst, std::abs(m.from_integral - m.from_roots) / m.from_roots);
    }
    gate.report(8, worst <= 1e-3 && unconverged == 0, "log-integral and root Mahler measures agree to 1e-3 relative",
                fmt("100 samples, n in [2, 512]: worst relative gap %.3e", worst));
  }

  // 9. Covariance convergence.
  {
    const std::size_t n = 10000;
    const double dr = std::pow(double(n), -1.1);
    double worst = 0.0;
    for (double r : {1.0, 1.0 - dr, 1.0 + dr}) worst = std::max(worst, cov_deviation(covariance4(n, r, 0.7, 2.0)));
    gate.report(9, worst <= 10.0 / std::sqrt(double(n)), "cov_deviation(V(0.7, 2.0)) <= 10/sqrt(n) at n=1e4",
                fmt("worst over r in {1, 1 +- n^-1.1}: %.3e", worst));
  }

  // 10. Turan suite.
  {
    std::size_t violations = 0, refined = 0;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const TuranInstance t = random_turan_instance(derive_seed(10, i), 5, 50);
      const TuranReport rep = turan_check(t.coeffs, t.freqs, t.e_lo, t.e_hi, 20000);
      violations += rep.pass ? 0 : 1;
      refined += rep.refined ? 1 : 0;
      worst = std::max(worst, rep.lhs_sup / rep.rhs_upper);
    }
    gate.report(10, violations == 0, "200 random Turan instances, h <= 5: no violations",
                fmt("violations %zu, dense re-checks %zu, max lhs/rhs %.4f", violations, refined, worst));
  }

  // 11. Small-ball estimator.
  {
    const std::size_t nodes = 4096;
    auto exact = [](double a) {
      double total = 0.0;
      std::size_t count = 0;
      enumerate(4, [&](const LittlewoodPoly& p) {
        total += small_ball_fraction(p, 1.0, a, 1u << 18);
        ++count;
      });
      return total / double(count);
    };
    std::vector<SmallBallEstimate> est;
    bool within = true;
    std::string detail;
    bool rhs_ok = true;
    for (double a : {0.05, 0.1, 0.2}) {
      est.push_back(small_ball(4, 1.0, a, 4000, nodes, 11));
      const double truth = exact(a);
      within = within && std::abs(est.back().estimate - truth) <= 2.0 * est.back().std_error;
      detail += fmt("a=%.2f: %.5f +- %.5f vs %.5f; ", a, est.back().estimate, est.back().std_error, truth);
      // With C = 1 the bound 1/n^5 + n^240 a log(1/a) exceeds 1, so it cannot be violated.
      const double log_rhs = 240.0 * std::log(4.0) + std::log(a * std::log(1.0 / a));
      rhs_ok = rhs_ok && std::log(est.back().estimate + 1e-300) <= std::log1p(std::exp(log_rhs));
    }
    const bool monotone = est[0].estimate <= est[1].estimate + 2 * est[1].std_error &&
                          est[1].estimate <= est[2].estimate + 2 * est[2].std_error;
    gate.report(11, within && monotone,
                "small-ball n=4 within 2 SE of enumeration, monotone in a over {0.05, 0.1, 0.2}",
                detail + (rhs_ok ? "upper bound never violated (vacuous at this scale)" : "upper bound violated"));
  }

  // 12. Determinism across worker counts.
  {
    bool same = true;
    std::size_t runs = 0;
    for (const auto& [id, list] : reference_runs) {
      for (const auto& [spec, bytes] : list) {
        same = same && fingerprint(run_with(spec, 8)) == bytes;
        ++runs;
      }
    }
    gate.report(12, same, "criteria 1-5 reruns bit-identical with 1 and 8 workers",
                fmt("%zu runs compared record by record", runs));
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 12 criteria failed; %.1f s\n", gate.failed, secs);
  return gate.failed == 0 ? 0 : 1;
}
