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

#include "netsamp/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "netsamp/error.hpp"

namespace netsamp {

bool PatternGraph::adjacent(int i, int j) const {
  if (i < 1 || i > order_ || j < 1 || j > order_) return false;
  return (neighbor_masks_[i - 1] >> (j - 1)) & 1U;
}

PatternGraph make_pattern(int order, const std::vector<VertexPair>& edges,
                          std::string name) {
  if (order < 2) {
    Fail("TooFewVertices", ErrorKind::kUsage, "pattern needs R >= 2");
  }
  if (order > kMaxPatternOrder) {
    Fail("PatternTooLarge", ErrorKind::kUsage,
         "pattern order " + std::to_string(order) + " exceeds 8");
  }
  PatternGraph h;
  h.order_ = order;
  h.name_ = std::move(name);
  h.neighbor_masks_.assign(order, 0);
  for (auto [a, b] : edges) {
    if (a < 1 || a > order || b < 1 || b > order) {
      Fail("IndexOutOfRange", ErrorKind::kUsage,
           "edge (" + std::to_string(a) + "," + std::to_string(b) +
               ") outside 1.." + std::to_string(order));
    }
    if (a == b) Fail("SelfLoop", ErrorKind::kUsage, "self-loop at " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if ((h.neighbor_masks_[a - 1] >> (b - 1)) & 1U) {
      Fail("DuplicateEdge", ErrorKind::kUsage,
           "edge (" + std::to_string(a) + "," + std::to_string(b) + ") repeated");
    }
    h.neighbor_masks_[a - 1] |= 1U << (b - 1);
    h.neighbor_masks_[b - 1] |= 1U << (a - 1);
    h.edges_.emplace_back(a, b);
  }
  std::sort(h.edges_.begin(), h.edges_.end());

  // Connectivity from vertex 1.
  std::uint32_t seen = 1U, frontier = 1U;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < order; ++v) {
      if ((frontier >> v) & 1U) next |= h.neighbor_masks_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != (order == 32 ? ~0U : (1U << order) - 1U)) {
    Fail("DisconnectedPattern", ErrorKind::kUsage, "pattern is not connected");
  }

  h.neighbors_.resize(order);
  h.incident_.resize(order);
  h.nonincident_.resize(order);
  for (int r = 1; r <= order; ++r) {
    for (int v = 1; v <= order; ++v) {
      if (h.adjacent(r, v)) h.neighbors_[r - 1].push_back(v);
    }
    for (int e = 0; e < h.size(); ++e) {
      const auto& [a, b] = h.edges_[e];
      (a == r || b == r ? h.incident_ : h.nonincident_)[r - 1].push_back(e);
    }
  }
  return h;
}

PatternGraph canonical(MotifKind kind, int order) {
  std::vector<VertexPair> edges;
  switch (kind) {
    case MotifKind::kEdge:
      return make_pattern(2, {{1, 2}}, "edge");
    case MotifKind::kWedge:
      return make_pattern(3, {{1, 2}, {1, 3}}, "wedge");
    case MotifKind::kTriangle:
      return make_pattern(3, {{1, 2}, {1, 3}, {2, 3}}, "triangle");
    case MotifKind::kComplete:
      if (order < 2 || order > kMaxPatternOrder) break;
      for (int i = 1; i <= order; ++i)
        for (int j = i + 1; j <= order; ++j) edges.emplace_back(i, j);
      return make_pattern(order, edges, "complete:" + std::to_string(order));
    case MotifKind::kStar:
      if (order < 2 || order > kMaxPatternOrder) break;
      for (int j = 2; j <= order; ++j) edges.emplace_back(1, j);
      return make_pattern(order, edges, "star:" + std::to_string(order));
    case MotifKind::kLine:
      if (order < 2 || order > kMaxPatternOrder) break;
      for (int j = 1; j < order; ++j) edges.emplace_back(j, j + 1);
      return make_pattern(order, edges, "line:" + std::to_string(order));
    case MotifKind::kCircle:
      if (order < 3 || order > kMaxPatternOrder) break;
      for (int j = 1; j < order; ++j) edges.emplace_back(j, j + 1);
      edges.emplace_back(1, order);
      return make_pattern(order, edges, "circle:" + std::to_string(order));
  }
  Fail("InvalidSize", ErrorKind::kUsage,
       "invalid motif size " + std::to_string(order));
}

PatternGraph line_circle(int m, int n) {
  if (m < 2 || n < 3 || m + n - 1 > kMaxPatternOrder) {
    Fail("InvalidSize", ErrorKind::kUsage, "line-circle needs m >= 2, n >= 3");
  }
  std::vector<VertexPair> edges;
  for (int j = 1; j < n; ++j) edges.emplace_back(j, j + 1);
  edges.emplace_back(1, n);
  for (int j = n; j < n + m - 1; ++j) edges.emplace_back(j, j + 1);
  return make_pattern(m + n - 1, edges,
                      "line-circle:" + std::to_string(m) + "," + std::to_string(n));
}

PatternGraph cocktail_party(int order) {
  if (order < 4 || order % 2 != 0 || order > kMaxPatternOrder) {
    Fail("InvalidSize", ErrorKind::kUsage, "regular motif needs even R >= 4");
  }
  std::vector<VertexPair> edges;
  for (int i = 1; i <= order; ++i)
    for (int j = i + 1; j <= order; ++j)
      if (j != i + order / 2) edges.emplace_back(i, j);
  return make_pattern(order, edges, "regular:" + std::to_string(order));
}

PatternGraph parse_pattern_text(const std::string& text) {
  std::istringstream in(text);
  int order = 0;
  if (!(in >> order)) Fail("ParseError", ErrorKind::kData, "missing pattern order");
  std::vector<VertexPair> edges;
  int a = 0, b = 0;
  while (in >> a) {
    if (!(in >> b)) Fail("ParseError", ErrorKind::kData, "dangling edge endpoint");
    edges.emplace_back(a, b);
  }
  if (!in.eof()) Fail("ParseError", ErrorKind::kData, "non-integer token in pattern");
  return make_pattern(order, edges);
}

PatternGraph parse_motif(const std::string& spec) {
  if (spec == "edge") return canonical(MotifKind::kEdge);
  if (spec == "wedge") return canonical(MotifKind::kWedge);
  if (spec == "triangle") return canonical(MotifKind::kTriangle);
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);
    if (head == "file") {
      std::ifstream file(tail);
      if (!file) Fail("ParseError", ErrorKind::kData, "cannot open " + tail);
      std::stringstream buffer;
      buffer << file.rdbuf();
      return parse_pattern_text(buffer.str());
    }
    int order = 0;
    try {
      std::size_t used = 0;
      order = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      Fail("UsageError", ErrorKind::kUsage, "bad motif size in '" + spec + "'");
    }
    if (head == "complete") return canonical(MotifKind::kComplete, order);
    if (head == "star") return canonical(MotifKind::kStar, order);
    if (head == "line") return canonical(MotifKind::kLine, order);
    if (head == "circle") return canonical(MotifKind::kCircle, order);
  }
  Fail("UsageError", ErrorKind::kUsage, "unknown motif '" + spec + "'");
}

double psi(const PatternGraph& h, const Eigen::MatrixXd& b,
           std::span<const int> classes) {
  if (static_cast<int>(classes.size()) != h.order()) {
    Fail("IndexOutOfRange", ErrorKind::kUsage, "class vector length != R");
  }
  const int k = static_cast<int>(b.rows());
  for (int c : classes) {
    if (c < 1 || c > k) {
      Fail("IndexOutOfRange", ErrorKind::kUsage,
           "class " + std::to_string(c) + " outside 1.." + std::to_string(k));
    }
  }
  double product = 1.0;
  for (const auto& [i, j] : h.edges()) {
    product *= b(classes[i - 1] - 1, classes[j - 1] - 1);
  }
  return product;
}

std::vector<int> swap_vector(std::vector<int> classes, int k) {
  if (k < 1 || k > static_cast<int>(classes.size())) {
    Fail("IndexOutOfRange", ErrorKind::kUsage, "swap position out of range");
  }
  std::swap(classes[0], classes[k - 1]);
  return classes;
}

}  // namespace netsamp
