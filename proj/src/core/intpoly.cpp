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

#include "intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lw::detail {
namespace {

BigInt ipow(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

IntPoly scale(const IntPoly& p, const BigInt& s) {
  IntPoly out(p);
  for (auto& c : out) c *= s;
  trim(out);
  return out;
}

IntPoly divide_by_scalar(const IntPoly& p, const BigInt& s) {
  IntPoly out(p);
  for (auto& c : out) {
    if (c % s != 0) throw std::logic_error("divide_by_scalar: inexact division");
    c /= s;
  }
  return out;
}

int moebius(std::uint64_t m) {
  int mu = 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return 0;
      mu = -mu;
    }
  }
  if (m > 1) mu = -mu;
  return mu;
}

}  // namespace

IntPoly make_int_poly(std::span<const std::int8_t> coeffs) {
  IntPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  return p;
}

IntPoly make_int_poly(std::span<const std::int64_t> coeffs) {
  IntPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  return p;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * static_cast<long long>(k);
  trim(out);
  return out;
}

IntPoly subtract(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  trim(out);
  return out;
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.empty()) return {};
  BigInt c = content(p);
  if (p.back() < 0) c = -c;
  return divide_by_scalar(p, c);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::invalid_argument("pseudo_remainder: division by zero polynomial");
  const int db = degree(b);
  IntPoly r = a;
  trim(r);
  int e = std::max(degree(a) - db + 1, 0);
  const BigInt& lb = b.back();
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (int k = 0; k <= db; ++k) r[k + shift] -= lr * b[k];
    trim(r);
    --e;
  }
  if (e > 0) r = scale(r, ipow(lb, e));
  return r;
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (a.empty()) return IntPoly{};
  const int da = degree(a), db = degree(b);
  if (da < db) return std::nullopt;
  IntPoly r = a;
  IntPoly q(da - db + 1);
  const BigInt& lb = b.back();
  for (int shift = da - db; shift >= 0; --shift) {
    const BigInt& top = r[shift + db];
    if (top == 0) continue;
    if (top % lb != 0) return std::nullopt;
    const BigInt t = top / lb;
    q[shift] = t;
    for (int k = 0; k <= db; ++k) r[k + shift] -= t * b[k];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

IntPoly subresultant_gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  if (degree(b) > degree(a)) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  BigInt g = 1, h = 1;
  for (;;) {
    const int delta = degree(a) - degree(b);
    IntPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive_part(b);
    if (degree(r) == 0) return IntPoly{BigInt(1)};
    a = std::move(b);
    b = divide_by_scalar(r, g * ipow(h, delta));
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      const BigInt num = ipow(g, delta);
      const BigInt den = ipow(h, delta - 1);
      h = num / den;
    }
  }
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f_in) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = primitive_part(f_in);
  if (degree(f) <= 0) return out;
  const IntPoly fp = derivative(f);
  const IntPoly a0 = subresultant_gcd(f, fp);
  IntPoly b = *exact_divide(f, a0);
  IntPoly c = *exact_divide(fp, a0);
  IntPoly d = subtract(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    IntPoly a = d.empty() ? primitive_part(b) : subresultant_gcd(b, d);
    IntPoly b_next = *exact_divide(b, a);
    if (!d.empty()) {
      c = *exact_divide(d, a);
    } else {
      c.clear();
    }
    d = subtract(c, derivative(b_next));
    if (degree(a) > 0) out.emplace_back(primitive_part(a), i);
    b = std::move(b_next);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t b) {
  std::uint64_t result = b;
  for (std::uint64_t q = 2; q * q <= b; ++q) {
    if (b % q == 0) {
      while (b % q == 0) b /= q;
      result -= result / q;
    }
  }
  if (b > 1) result -= result / b;
  return result;
}

std::vector<std::int64_t> cyclotomic(std::uint64_t b) {
  if (b == 0) throw std::invalid_argument("cyclotomic: order must be positive");
  std::vector<std::uint64_t> up, down;
  for (std::uint64_t d = 1; d <= b; ++d) {
    if (b % d != 0) continue;
    const int mu = moebius(b / d);
    if (mu > 0) up.push_back(d);
    if (mu < 0) down.push_back(d);
  }
  // Multiply by (x^d - 1) for mu = +1, then divide exactly by (x^d - 1) for mu = -1.
  std::vector<std::int64_t> p{1};
  for (std::uint64_t d : up) {
    std::vector<std::int64_t> next(p.size() + d, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + d] += p[k];
      next[k] -= p[k];
    }
    p = std::move(next);
  }
  for (std::uint64_t d : down) {
    // p = q * (x^d - 1): q[k] = q[k - d] - p[k] running from the bottom.
    std::vector<std::int64_t> q(p.size() - d, 0);
    for (std::size_t k = 0; k < q.size(); ++k) {
      q[k] = -p[k] + (k >= d ? q[k - d] : 0);
    }
    p = std::move(q);
  }
  if (p.back() < 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

std::vector<double> to_double(const IntPoly& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.convert_to<double>());
  return out;
}

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(t & kMersenne61) + static_cast<std::uint64_t>(t >> 61);
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mod_mul(a, a)) {
    if (e & 1) r = mod_mul(r, a);
  }
  return r;
}

std::vector<std::uint64_t> reduce_mod(std::span<const std::int8_t> c) {
  std::vector<std::uint64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] >= 0 ? std::uint64_t(c[i]) : kMersenne61 - std::uint64_t(-c[i]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

int gcd_degree_mod_prime(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  std::vector<std::uint64_t> u = reduce_mod(a), v = reduce_mod(b);
  while (!v.empty()) {
    // u <- u mod v
    const std::uint64_t inv = mod_pow(v.back(), kMersenne61 - 2);
    while (u.size() >= v.size()) {
      const std::uint64_t q = mod_mul(u.back(), inv);
      const std::size_t shift = u.size() - v.size();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t t = mod_mul(q, v[i]);
        u[shift + i] = u[shift + i] >= t ? u[shift + i] - t : u[shift + i] + kMersenne61 - t;
      }
      while (!u.empty() && u.back() == 0) u.pop_back();
    }
    std::swap(u, v);
  }
  return int(u.size()) - 1;
}

}  // namespace lw::detail
