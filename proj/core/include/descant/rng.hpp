// Copyright 2026 The Descant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

// Deterministic, counter-based randomness. Batch results must be
// reproducible across runs and worker counts, so nothing here depends on
// global state, the platform RNG, or call order.

namespace descant {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

/// SplitMix64 finalizer; the core bijective mixing step.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Stable per-entry key: adding or removing other entries never changes it.
inline std::uint64_t entry_key(std::uint64_t global_seed, std::string_view id) {
  std::uint64_t h = kFnvOffset;
  for (int shift = 0; shift < 64; shift += 8) {
    h ^= (global_seed >> shift) & 0xffu;
    h *= kFnvPrime;
  }
  return mix64(fnv1a64(id, h));
}

/// n-th word of the counter stream keyed by `key`.
constexpr std::uint64_t counter_word(std::uint64_t key, std::uint64_t n) {
  return mix64(key ^ mix64(n + 1));
}

/// Uniform double in [0, 1) from stream word n.
constexpr double counter_uniform(std::uint64_t key, std::uint64_t n) {
  return static_cast<double>(counter_word(key, n) >> 11) * 0x1.0p-53;
}

/// Sequential view over a counter stream, for bulk draws (noise synthesis).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_word() { return counter_word(key_, n_++); }
  double uniform() { return counter_uniform(key_, n_++); }

  /// Standard normal via Box-Muller; consumes two words per pair.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    // Guard the log against a zero draw.
    double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-63));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t key_;
  std::uint64_t n_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace descant
