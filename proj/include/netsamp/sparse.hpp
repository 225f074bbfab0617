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

// Sparse-regime thresholds: densest t-vertex induced subgraphs of a pattern,
// the decay-rate bound c(H), and the sparse limiting variance.

#ifndef NETSAMP_SPARSE_HPP_
#define NETSAMP_SPARSE_HPP_

#include <vector>

#include <Eigen/Dense>

#include "netsamp/asymptotics.hpp"
#include "netsamp/pattern.hpp"

namespace netsamp {

// Maximum edge count over t-vertex induced subgraphs. Error: IndexOutOfRange.
int f1(const PatternGraph& h, int t);

// The lexicographically first vertex subset (1-based) attaining f1(H, t).
std::vector<int> densest_subset(const PatternGraph& h, int t);

// min over t in 2..R of (t-1) / f1(H, t).
double c_of_H(const PatternGraph& h);

// Max over bijections of |E(H1) cap E(H2)| for two copies of H whose vertex
// sets share exactly t vertices. R <= 6. Error: PatternTooLarge.
int f1_intersection_oracle(const PatternGraph& h, int t);

struct SparseProfile {
  int order = 0;                // R
  int size = 0;                 // T
  std::vector<int> f1_values;   // index t - 2 for t = 2..R
  double c = 0.0;               // admissible beta lie in (0, c)
};

SparseProfile sparse_profile(const PatternGraph& h);

struct SparseVariance {
  VarianceReport report;   // induced variance with C in place of Pi
  double scale_exponent;   // pivot scaling N^{scale_exponent}
  bool admissible;         // beta < c(H); otherwise normality not guaranteed
};

// Error: InvalidModel for beta outside [0,1).
SparseVariance sparse_variance(const PatternGraph& h, const Eigen::MatrixXd& c,
                               const Eigen::VectorXd& lambda, double p,
                               double beta);

}  // namespace netsamp

#endif  // NETSAMP_SPARSE_HPP_
