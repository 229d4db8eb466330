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

#ifndef LITTLEWOOD_RNG_HPP_
#define LITTLEWOOD_RNG_HPP_

#include <cstdint>

namespace lw {

// Counter-based 64-bit generator.
//
// Word j of the stream keyed by `seed` is
//
//   stream_word(seed, j) = mix64(seed + (j + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer (a bijection on 64-bit words).
// Sign k of a sampled polynomial is bit (k mod 64) of word floor(k / 64):
// a zero bit is +1, a one bit is -1. Nothing depends on thread scheduling or
// on the platform's <random> implementation.
//
// Per-sample sub-seeds come from derive_seed, which uses a second, unrelated
// finalizer (MurmurHash3's fmix64) so that derived streams of neighbouring
// masters do not overlap.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_word(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * kGoldenGamma);
}

// Injective in `index` for a fixed master: the affine map below is a bijection
// modulo 2^64 (odd multiplier) and both finalizers are bijections.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = mix64(master ^ 0x6A09E667F3BCC909ULL) + (index + 1) * 0xD1B54A32D192ED03ULL;
  z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
  z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
  return z ^ (z >> 33);
}

}  // namespace lw

#endif  // LITTLEWOOD_RNG_HPP_
