// Copyright 2026 The spca authors
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

#pragma once

#include <cstdint>

namespace spca::rng {

// Counter-based deterministic random stream.  Draw k is obtained by running
// the SplitMix64 output permutation on seed + (k+1) * golden-ratio increment,
// so every draw is a pure function of (seed, k): the stream is reproducible
// bit-for-bit on any platform and can be sampled out of order.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t at(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + kGolden * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform draw in the open interval (0, 1): 53 high bits, offset by half an
/// ulp so that 0 and 1 are never produced (safe to feed to an inverse CDF).
inline double uniform_open01(std::uint64_t seed, std::uint64_t k) {
  return (static_cast<double>(at(seed, k) >> 11) + 0.5) * 0x1.0p-53;
}

/// Inverse of the standard normal CDF, rational approximation of Wichura's
/// AS 241 (PPND16 variant); absolute error below 1e-15 on (0, 1).
double normal_icdf(double p);

/// Standard normal draw k of the stream keyed by seed.
inline double normal(std::uint64_t seed, std::uint64_t k) {
  return normal_icdf(uniform_open01(seed, k));
}

/// Small stateful convenience wrapper over the same stream.
class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t start = 0)
      : seed_(seed), next_(start) {}

  std::uint64_t next_u64() { return at(seed_, next_++); }
  double next_uniform() { return uniform_open01(seed_, next_++); }
  double next_normal() { return normal_icdf(next_uniform()); }

  /// Uniform integer in [0, bound) by rejection-free scaled multiply.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(next_uniform() * static_cast<double>(bound)) % bound;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t next_;
};

}  // namespace spca::rng
