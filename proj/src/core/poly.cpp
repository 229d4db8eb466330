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

#include "littlewood/poly.hpp"

#include <cmath>

#include "fft.hpp"
#include "littlewood/error.hpp"
#include "littlewood/rng.hpp"

namespace lw {

LittlewoodPoly::LittlewoodPoly(std::vector<std::int8_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("Littlewood polynomial needs at least one coefficient");
  for (std::int8_t c : coeffs_) {
    if (c != 1 && c != -1) throw InvalidArgument("Littlewood coefficients must be +1 or -1");
  }
}

LittlewoodPoly LittlewoodPoly::from_string(std::string_view signs) {
  std::vector<std::int8_t> coeffs;
  coeffs.reserve(signs.size());
  for (char ch : signs) {
    if (ch == '+') {
      coeffs.push_back(1);
    } else if (ch == '-') {
      coeffs.push_back(-1);
    } else {
      throw InvalidArgument(std::string("unexpected character in sign string: '") + ch + "'");
    }
  }
  return LittlewoodPoly(std::move(coeffs));
}

std::string LittlewoodPoly::to_string() const {
  std::string out(coeffs_.size(), '+');
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] < 0) out[k] = '-';
  }
  return out;
}

LittlewoodPoly sample(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample: n must be at least 1");
  std::vector<std::int8_t> coeffs(n);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k % 64 == 0) word = stream_word(seed, k / 64);
    coeffs[k] = ((word >> (k % 64)) & 1U) ? -1 : 1;
  }
  return LittlewoodPoly(std::move(coeffs));
}

LittlewoodPoly pattern_at(std::size_t n, std::uint64_t index) {
  if (n == 0 || n > 64) throw InvalidArgument("pattern_at: n must be in [1, 64]");
  if (n < 64 && index >> n) throw InvalidArgument("pattern_at: index out of range");
  std::vector<std::int8_t> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    coeffs[k] = ((index >> (n - 1 - k)) & 1U) ? -1 : 1;
  }
  return LittlewoodPoly(std::move(coeffs));
}

void enumerate(std::size_t n, const std::function<void(const LittlewoodPoly&)>& visit) {
  if (n == 0 || n > kMaxEnumerationLength) {
    throw InvalidArgument("enumerate: n must be in [1, 24]");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < total; ++i) visit(pattern_at(n, i));
}

Complex eval_point(const LittlewoodPoly& p, Complex z) {
  const auto c = p.coeffs();
  const double zr = z.real(), zi = z.imag();
  double re = c.back(), im = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    const double t = re * zr - im * zi + c[k];
    im = re * zi + im * zr;
    re = t;
  }
  return {re, im};
}

void eval_with_derivative(const LittlewoodPoly& p, Complex z, Complex& value, Complex& derivative) {
  const auto c = p.coeffs();
  const double zr = z.real(), zi = z.imag();
  double re = c.back(), im = 0.0, dre = 0.0, dim = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    const double td = dre * zr - dim * zi + re;
    dim = dre * zi + dim * zr + im;
    dre = td;
    const double t = re * zr - im * zi + c[k];
    im = re * zi + im * zr;
    re = t;
  }
  value = {re, im};
  derivative = {dre, dim};
}

EvalGrid eval_grid(const LittlewoodPoly& p, double radius, std::size_t nodes) {
  if (nodes == 0) throw InvalidArgument("eval_grid: node count must be at least 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("eval_grid: radius must be positive and finite");
  }
  EvalGrid grid;
  grid.radius = radius;
  grid.values.assign(nodes, Complex{});
  const auto c = p.coeffs();
  if (radius == 1.0) {
    for (std::size_t k = 0; k < c.size(); ++k) grid.values[k % nodes] += double(c[k]);
  } else {
    for (std::size_t k = 0; k < c.size(); ++k) {
      grid.values[k % nodes] += double(c[k]) * std::pow(radius, double(k));
    }
  }
  detail::backward_dft(grid.values);
  return grid;
}

double sigma_sq(std::size_t n, double radius) {
  if (n == 0) throw InvalidArgument("sigma_sq: n must be at least 1");
  if (!(radius >= 0.0)) throw InvalidArgument("sigma_sq: radius must be non-negative");
  const double r2m1 = (radius - 1.0) * (radius + 1.0);
  if (std::abs(r2m1) > 1e-8) {
    return std::expm1(2.0 * double(n) * std::log(radius)) / r2m1;
  }
  const double r2 = radius * radius;
  double sum = 0.0, w = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += w;
    w *= r2;
  }
  return sum;
}

Complex normalized_eval(const LittlewoodPoly& p, Complex z) {
  return eval_point(p, z) / std::sqrt(sigma_sq(p.size(), std::abs(z)));
}

LittlewoodPoly reverse(const LittlewoodPoly& p) {
  std::vector<std::int8_t> coeffs(p.coeffs().rbegin(), p.coeffs().rend());
  return LittlewoodPoly(std::move(coeffs));
}

}  // namespace lw
