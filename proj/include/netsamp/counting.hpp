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

// Exact subgraph counts over ordered tuples of distinct vertices, and the
// global clustering coefficient S(triangle) / S(wedge).

#ifndef NETSAMP_COUNTING_HPP_
#define NETSAMP_COUNTING_HPP_

#include <optional>
#include <string>

#include "netsamp/pattern.hpp"
#include "netsamp/population.hpp"
#include "netsamp/sampling.hpp"

namespace netsamp {

using Count = unsigned __int128;

std::string count_to_string(Count value);
double count_to_double(Count value);

struct CountResult {
  Count value = 0;
  std::string pattern;
  std::optional<Scheme> scheme;  // empty for population counts
};

// Edge, wedge and triangle counts computed together (fast paths).
struct MotifCounts {
  Count edge = 0;
  Count wedge = 0;
  Count triangle = 0;
  double clustering() const;  // triangle / wedge, 0 when no wedges
};

// Error: PatternLargerThanGraph.
CountResult count_population(const PopulationGraph& g, const PatternGraph& h);
CountResult count_estimated(const SampleView& view, const PatternGraph& h);

// Backtracking enumeration (no fast path); `view` may be null for the
// population count. Exposed for cross-checking the fast paths.
Count count_backtracking(const PopulationGraph& g, const PatternGraph& h,
                         const SampleView* view);

MotifCounts population_motif_counts(const PopulationGraph& g);
MotifCounts estimated_motif_counts(const SampleView& view);

double clustering_population(const PopulationGraph& g);
double clustering_estimated(const SampleView& view);

}  // namespace netsamp

#endif  // NETSAMP_COUNTING_HPP_
