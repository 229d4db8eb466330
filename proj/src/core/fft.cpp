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

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace lw::detail {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    // Planning only reads the buffer geometry; FFTW_ESTIMATE leaves it untouched.
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(n, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::size_t, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void backward_dft(std::vector<std::complex<double>>& x) {
  if (x.size() <= 1) return;
  fftw_plan plan = cache().get(x.size());
  auto* buf = reinterpret_cast<fftw_complex*>(x.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace lw::detail
