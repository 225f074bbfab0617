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

#include "netsamp/sparse.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "netsamp/error.hpp"

namespace netsamp {
namespace {

int InducedEdges(const PatternGraph& h, std::uint32_t subset) {
  int twice = 0;
  for (int v = 1; v <= h.order(); ++v) {
    if ((subset >> (v - 1)) & 1U) twice += std::popcount(h.neighbor_mask(v) & subset);
  }
  return twice / 2;
}

void CheckT(const PatternGraph& h, int t) {
  if (t < 2 || t > h.order()) {
    Fail("IndexOutOfRange", ErrorKind::kUsage, "t must lie in 2..R");
  }
}

}  // namespace

std::vector<int> densest_subset(const PatternGraph& h, int t) {
  CheckT(h, t);
  const int r = h.order();
  std::vector<int> combo(t);
  std::iota(combo.begin(), combo.end(), 1);
  std::vector<int> best;
  int best_edges = -1;
  while (true) {
    std::uint32_t subset = 0;
    for (int v : combo) subset |= 1U << (v - 1);
    const int edges = InducedEdges(h, subset);
    if (edges > best_edges) {  // strict: keeps the lowest-index subset
      best_edges = edges;
      best = combo;
    }
    int i = t - 1;
    while (i >= 0 && combo[i] == r - t + i + 1) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < t; ++j) combo[j] = combo[j - 1] + 1;
  }
  return best;
}

int f1(const PatternGraph& h, int t) {
  std::uint32_t subset = 0;
  for (int v : densest_subset(h, t)) subset |= 1U << (v - 1);
  return InducedEdges(h, subset);
}

double c_of_H(const PatternGraph& h) {
  double best = 1e300;
  for (int t = 2; t <= h.order(); ++t) {
    best = std::min(best, static_cast<double>(t - 1) / f1(h, t));
  }
  return best;
}

int f1_intersection_oracle(const PatternGraph& h, int t) {
  CheckT(h, t);
  const int r = h.order();
  if (r > 6) Fail("PatternTooLarge", ErrorKind::kUsage, "oracle limited to R <= 6");
  // Both copies live on R-sets sharing vertices 0..t-1. A bijection places
  // pattern vertex v at slot perm[v-1]; slots < t are shared. Record the set
  // of shared-vertex pairs covered by the placed pattern edges.
  auto pair_bit = [t](int a, int b) {
    if (a > b) std::swap(a, b);
    return std::uint64_t{1} << (a * t + b);
  };
  std::set<std::uint64_t> masks;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t m = 0;
    for (const auto& [i, j] : h.edges()) {
      const int a = perm[i - 1], b = perm[j - 1];
      if (a < t && b < t) m |= pair_bit(a, b);
    }
    masks.insert(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  int best = 0;
  for (std::uint64_t m1 : masks)
    for (std::uint64_t m2 : masks) best = std::max(best, std::popcount(m1 & m2));
  return best;
}

SparseProfile sparse_profile(const PatternGraph& h) {
  SparseProfile out;
  out.order = h.order();
  out.size = h.size();
  for (int t = 2; t <= h.order(); ++t) out.f1_values.push_back(f1(h, t));
  out.c = c_of_H(h);
  return out;
}

SparseVariance sparse_variance(const PatternGraph& h, const Eigen::MatrixXd& c,
                               const Eigen::VectorXd& lambda, double p,
                               double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    Fail("InvalidModel", ErrorKind::kUsage, "beta must lie in [0,1)");
  }
  SparseVariance out{sigma2_induced(h, c, lambda, p),
                     -h.order() + 0.5 + h.size() * beta, beta < c_of_H(h)};
  return out;
}

}  // namespace netsamp
