// Copyright 2026 The netsamp Authors.
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

// Counter-based random streams built on the SplitMix64 finalizer.
//
// Algorithm (portable, documented for cross-language replay):
//   mix64(z): z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27;
//             z *= 0x94D049BB133111EB; z ^= z>>31.
//   draw(key, c) = mix64(key + (c + 1) * 0x9E3779B97F4A7C15), i.e. the c-th
//   output of a SplitMix64 generator whose state starts at `key`.
//   uniform(key, c) = (draw(key, c) >> 11) * 2^-53, in [0, 1).
//   derive(seed, domain) = mix64(seed ^ mix64(domain)).
// Population entry (i, j), i < j, 0-based, uses counter i * N + j under key
// derive(seed, kPopulationDomain); mask bit i uses counter i under key
// derive(seed, kMaskDomain).

#ifndef NETSAMP_RNG_HPP_
#define NETSAMP_RNG_HPP_

#include <cstdint>
#include <limits>

namespace netsamp {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kPopulationDomain = 0x504F50554C415431ULL;
inline constexpr std::uint64_t kMaskDomain = 0x4D41534B53454C31ULL;
inline constexpr std::uint64_t kReplicateDomain = 0x5245504C49434131ULL;
inline constexpr std::uint64_t kClusterDomain = 0x4B4D45414E535031ULL;

constexpr std::uint64_t Mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Two-argument mixer used for seed derivation.
constexpr std::uint64_t Mix64(std::uint64_t seed, std::uint64_t domain) {
  return Mix64(seed ^ Mix64(domain));
}

constexpr std::uint64_t CounterDraw(std::uint64_t key, std::uint64_t counter) {
  return Mix64(key + (counter + 1) * kGolden);
}

constexpr double ToUnit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double CounterUniform(std::uint64_t key, std::uint64_t counter) {
  return ToUnit(CounterDraw(key, counter));
}

// Seed of replicate m in a Monte-Carlo run with base seed `base`.
constexpr std::uint64_t ReplicateSeed(std::uint64_t base, std::uint64_t m) {
  return Mix64(base, kReplicateDomain + m);
}

// Sequential SplitMix64; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    state_ += kGolden;
    return Mix64(state_);
  }
  double Uniform() { return ToUnit((*this)()); }

 private:
  std::uint64_t state_;
};

}  // namespace netsamp

#endif  // NETSAMP_RNG_HPP_
