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

#ifndef LITTLEWOOD_SRC_CORE_INTPOLY_HPP_
#define LITTLEWOOD_SRC_CORE_INTPOLY_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lw::detail {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, lowest degree first, no trailing zeros.
// The zero polynomial is the empty vector.
using IntPoly = std::vector<BigInt>;

IntPoly make_int_poly(std::span<const std::int8_t> coeffs);
IntPoly make_int_poly(std::span<const std::int64_t> coeffs);

void trim(IntPoly& p);
int degree(const IntPoly& p);  // -1 for the zero polynomial
IntPoly derivative(const IntPoly& p);
IntPoly subtract(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& p);
// Divides by the content and makes the leading coefficient positive.
IntPoly primitive_part(const IntPoly& p);

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Quotient a / b when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

// gcd over Q, returned primitive with positive leading coefficient, computed with the
// subresultant remainder sequence so every intermediate stays in Z[x].
IntPoly subresultant_gcd(IntPoly a, IntPoly b);

// Yun's algorithm: f = prod_i a_i^i with the a_i square-free and pairwise coprime.
// Only factors of positive degree are returned, as (a_i, i).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// Phi_b, from the Moebius product over (x^d - 1), d | b.
std::vector<std::int64_t> cyclotomic(std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t b);

std::vector<double> to_double(const IntPoly& p);

// Degree of gcd(a, b) over GF(2^61 - 1). When neither leading coefficient vanishes
// modulo the prime this is an upper bound on the degree of the gcd over Q.
int gcd_degree_mod_prime(std::span<const std::int8_t> a, std::span<const std::int8_t> b);

}  // namespace lw::detail

#endif  // LITTLEWOOD_SRC_CORE_INTPOLY_HPP_
