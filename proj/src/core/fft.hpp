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

#ifndef LITTLEWOOD_SRC_CORE_FFT_HPP_
#define LITTLEWOOD_SRC_CORE_FFT_HPP_

#include <complex>
#include <vector>

namespace lw::detail {

// In-place backward DFT: x[j] <- sum_k x[k] exp(+2 pi i j k / N).
// Plans are created once per length under a lock; execution is reentrant.
void backward_dft(std::vector<std::complex<double>>& x);

}  // namespace lw::detail

#endif  // LITTLEWOOD_SRC_CORE_FFT_HPP_
