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

// Bernoulli node selection and the induced / ego-centric observation rules.

#ifndef NETSAMP_SAMPLING_HPP_
#define NETSAMP_SAMPLING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netsamp/pattern.hpp"
#include "netsamp/population.hpp"

namespace netsamp {

enum class Scheme { kInduced, kEgo };

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);  // Error: UsageError

// Selection indicators W as a packed bitset.
struct SampleMask {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<Word> bits;

  bool selected(int i) const { return (bits[i >> 6] >> (i & 63)) & 1U; }
  int count() const;
  std::vector<int> selected_vertices() const;
};

// Independent Bernoulli(p) indicators. Error: InvalidProbability.
SampleMask bernoulli_select(int n, double p, std::uint64_t seed);

// Mask from explicit indicators (p recorded for reference only).
SampleMask mask_from_indicators(const std::vector<int>& indicators, double p);

// Non-owning view; observation is a predicate over (mask, scheme).
struct SampleView {
  const PopulationGraph* population = nullptr;
  SampleMask mask;
  Scheme scheme = Scheme::kInduced;

  // Induced: W_i W_j = 1; Ego: max(W_i, W_j) = 1. Error: SelfPairQueried.
  bool is_observed(int i, int j) const;
};

// Product over pattern edges of h(W_{s_i}, W_{s_j}) for 0-based tuple s.
// Error: NonDistinctTuple.
int inclusion_weight(const PatternGraph& h, Scheme scheme,
                     std::span<const int> tuple, const SampleMask& mask);

}  // namespace netsamp

#endif  // NETSAMP_SAMPLING_HPP_
