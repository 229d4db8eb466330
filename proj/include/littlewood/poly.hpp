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

#ifndef LITTLEWOOD_POLY_HPP_
#define LITTLEWOOD_POLY_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lw {

using Complex = std::complex<double>;

// Sign sequence X_0, ..., X_{n-1} of sum_k X_k z^k with every X_k in {-1, +1}.
// Immutable after construction.
class LittlewoodPoly {
 public:
  // Throws InvalidArgument on an empty sequence or an entry outside {-1, +1}.
  explicit LittlewoodPoly(std::vector<std::int8_t> coeffs);

  // Parses '+'/'-' characters, index 0 first.
  static LittlewoodPoly from_string(std::string_view signs);

  std::size_t size() const { return coeffs_.size(); }
  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const std::int8_t> coeffs() const { return coeffs_; }
  std::int8_t operator[](std::size_t k) const { return coeffs_[k]; }

  std::string to_string() const;

  friend bool operator==(const LittlewoodPoly&, const LittlewoodPoly&) = default;

 private:
  std::vector<std::int8_t> coeffs_;
};

// P evaluated on the N nodes r * exp(2 pi i j / N).
struct EvalGrid {
  double radius = 1.0;
  std::vector<Complex> values;

  std::size_t node_count() const { return values.size(); }
};

inline constexpr std::size_t kMaxEnumerationLength = 24;

// Deterministic in (n, seed); see rng.hpp for the exact stream layout.
LittlewoodPoly sample(std::size_t n, std::uint64_t seed);

// The index-th pattern of length n in lexicographic order with '+' < '-'.
LittlewoodPoly pattern_at(std::size_t n, std::uint64_t index);

// Calls visit on all 2^n patterns in lexicographic order. 1 <= n <= 24.
void enumerate(std::size_t n, const std::function<void(const LittlewoodPoly&)>& visit);

Complex eval_point(const LittlewoodPoly& p, Complex z);

// P and P' together by Horner's rule.
void eval_with_derivative(const LittlewoodPoly& p, Complex z, Complex& value, Complex& derivative);

// Uses an FFT of the radius-scaled coefficients, folded modulo N when N < n.
EvalGrid eval_grid(const LittlewoodPoly& p, double radius, std::size_t nodes);

// sum_{k<n} r^{2k}: closed form away from r = 1, direct sum when |r^2 - 1| <= 1e-8.
double sigma_sq(std::size_t n, double radius);

Complex normalized_eval(const LittlewoodPoly& p, Complex z);

// z^{n-1} P(1/z): the coefficient sequence reversed.
LittlewoodPoly reverse(const LittlewoodPoly& p);

}  // namespace lw

#endif  // LITTLEWOOD_POLY_HPP_
