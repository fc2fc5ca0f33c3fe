// Copyright 2026 The stylofair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic random streams. Every random draw in the library comes from
// a Stream derived from the user seed plus a stream name, so results never
// depend on wall clock, thread scheduling or OS entropy.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace stylofair {

constexpr uint64_t splitmix64(uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr uint64_t fnv1a64(std::string_view s) noexcept {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

using Stream = std::mt19937_64;

// Substream keyed by (seed, name).
inline Stream make_stream(uint64_t seed, std::string_view name) {
  return Stream(splitmix64(seed ^ splitmix64(fnv1a64(name))));
}

// Substream keyed by (seed, name, index), e.g. one per author or repeat.
inline Stream make_stream(uint64_t seed, std::string_view name, uint64_t index) {
  return Stream(splitmix64(splitmix64(seed ^ splitmix64(fnv1a64(name))) + index));
}

// Portable helpers; the std distributions are implementation-defined, these
// are not, so stored outputs stay comparable across standard libraries.
inline double uniform01(Stream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline uint64_t uniform_index(Stream& rng, uint64_t n) {
  // Lemire-style rejection to avoid modulo bias.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

// Box-Muller; one normal per call, the sine branch is discarded.
inline double standard_normal(Stream& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

template <typename Container>
void shuffle(Container& c, Stream& rng) {
  for (size_t i = c.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(uniform_index(rng, i));
    using std::swap;
    swap(c[i - 1], c[j]);
  }
}

}  // namespace stylofair
