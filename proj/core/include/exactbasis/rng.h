// Copyright 2026 The Authors.
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

// Seeded randomness. Every random choice in the library derives from a
// master seed through a named sub-seed, so results depend only on
// (seed, name) and never on call order across components.
//
// std::uniform_int_distribution is implementation-defined, so bounded draws
// go through UniformInt below to keep output identical across standard
// libraries.

#ifndef EXACTBASIS_RNG_H_
#define EXACTBASIS_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace exactbasis {

using Rng = std::mt19937_64;

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t SubSeed(uint64_t seed, std::string_view name) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return SplitMix64(seed ^ SplitMix64(h));
}

inline uint64_t SubSeed(uint64_t seed, std::string_view name, uint64_t index) {
  return SplitMix64(SubSeed(seed, name) + SplitMix64(index));
}

// Uniform integer in [lo, hi] by rejection sampling.
inline int64_t UniformInt(Rng& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(rng());
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<int64_t>(v % span);
}

}  // namespace exactbasis

#endif  // EXACTBASIS_RNG_H_
