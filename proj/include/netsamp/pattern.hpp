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

// Pattern (motif) graphs on vertices 1..R and the edge-product functional.

#ifndef NETSAMP_PATTERN_HPP_
#define NETSAMP_PATTERN_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace netsamp {

inline constexpr int kMaxPatternOrder = 8;

using VertexPair = std::pair<int, int>;

// Immutable, validated, connected simple graph on vertices 1..R (R <= 8).
class PatternGraph {
 public:
  int order() const { return order_; }                 // R
  int size() const { return static_cast<int>(edges_.size()); }  // T
  const std::string& name() const { return name_; }
  // Sorted pairs (i < j), 1-based, lexicographic order.
  const std::vector<VertexPair>& edges() const { return edges_; }

  bool adjacent(int i, int j) const;
  // Neighbours of vertex r (1-based, ascending).
  const std::vector<int>& neighbors(int r) const { return neighbors_[r - 1]; }
  // Indices into edges() of the edges incident / not incident to r.
  const std::vector<int>& incident_edges(int r) const {
    return incident_[r - 1];
  }
  const std::vector<int>& nonincident_edges(int r) const {
    return nonincident_[r - 1];
  }
  // Bit (v-1) set for every neighbour v of r.
  std::uint32_t neighbor_mask(int r) const { return neighbor_masks_[r - 1]; }

  bool operator==(const PatternGraph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  friend PatternGraph make_pattern(int, const std::vector<VertexPair>&,
                                   std::string);
  int order_ = 0;
  std::string name_;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> nonincident_;
  std::vector<std::uint32_t> neighbor_masks_;
};

// Validates and builds a pattern. Errors: TooFewVertices, PatternTooLarge,
// IndexOutOfRange, SelfLoop, DuplicateEdge, DisconnectedPattern.
PatternGraph make_pattern(int order, const std::vector<VertexPair>& edges,
                          std::string name = "custom");

enum class MotifKind { kEdge, kWedge, kTriangle, kComplete, kStar, kLine, kCircle };

// Canonical motifs. The wedge is the star on 3 vertices (centre 1); star(R)
// has centre 1; line(R) is 1-2-...-R; circle(R) closes the line with {R,1}.
// Error: InvalidSize.
PatternGraph canonical(MotifKind kind, int order = 0);

// Line on m vertices whose end vertex is shared with a circle on n vertices
// (order m + n - 1). Circle on 1..n, line n, n+1, ..., n+m-1.
PatternGraph line_circle(int m, int n);

// (R-2)-regular graph on an even number R >= 4 of vertices: the complete
// graph minus the perfect matching {i, i + R/2}.
PatternGraph cocktail_party(int order);

// Parses "edge", "wedge", "triangle", "complete:R", "star:R", "line:R",
// "circle:R" or "file:PATH". Error: UsageError / ParseError.
PatternGraph parse_motif(const std::string& spec);

// Pattern text: first line R, then one "i j" line per edge (1-based).
PatternGraph parse_pattern_text(const std::string& text);

// Product over pattern edges {i,j} of B(u_i, u_j); u holds 1-based classes.
// Error: IndexOutOfRange.
double psi(const PatternGraph& h, const Eigen::MatrixXd& b,
           std::span<const int> classes);

// Interchanges positions 1 and k of u (1-based k). Error: IndexOutOfRange.
std::vector<int> swap_vector(std::vector<int> classes, int k);

}  // namespace netsamp

#endif  // NETSAMP_PATTERN_HPP_
