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

// Population graphs (packed bitset adjacency) and stochastic block models.

#ifndef NETSAMP_POPULATION_HPP_
#define NETSAMP_POPULATION_HPP_

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace netsamp {

using Word = std::uint64_t;

inline int WordsFor(int n) { return (n + 63) / 64; }

// Symmetric 0/1 adjacency on vertices 0..N-1 with zero diagonal, stored as
// packed rows, plus 1-based class labels (empty when unlabeled).
class PopulationGraph {
 public:
  PopulationGraph() = default;
  explicit PopulationGraph(int n, std::vector<int> labels = {});

  int n() const { return n_; }
  int words() const { return words_; }
  const Word* row(int i) const { return bits_.data() + std::size_t(i) * words_; }
  bool edge(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1U; }
  int degree(int i) const;
  std::int64_t edge_count() const;  // unordered edges |E|
  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels);

  // Adds {i, j}; ignores i == j. Error: IndexOutOfRange.
  void add_edge(int i, int j);
  // Unordered edges (i < j) in row-major order.
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  Word* mutable_row(int i) { return bits_.data() + std::size_t(i) * words_; }
  int n_ = 0;
  int words_ = 0;
  std::vector<Word> bits_;
  std::vector<int> labels_;
};

// Dense SBM: symmetric K x K probability matrix with either explicit labels
// (length N, values 1..K) or class proportions (length K).
struct SbmModel {
  Eigen::MatrixXd pi;
  std::vector<int> labels;
  Eigen::VectorXd lambda;

  int classes() const { return static_cast<int>(pi.rows()); }
  // Errors: DimensionMismatch, InvalidModel.
  void validate() const;
};

// Sparse SBM: Pi_N = N^{-beta} C.
struct SparseSbmSpec {
  Eigen::MatrixXd c;
  Eigen::VectorXd lambda;
  double beta = 0.0;
  void validate() const;  // Error: InvalidModel
};

// Block-contiguous labels with largest-remainder class sizes.
std::vector<int> materialize_labels(const Eigen::VectorXd& lambda, int n);

// Class frequencies N_k / N of 1-based labels over K classes.
Eigen::VectorXd label_proportions(const std::vector<int>& labels, int k);

// Labels the model implies for N vertices. Error: DimensionMismatch.
std::vector<int> model_labels(const SbmModel& model, int n);

// Pi = N^{-beta} C. Error: ProbabilityOverflow.
SbmModel materialize_sparse(const SparseSbmSpec& spec, int n);

// Independent Bernoulli(pi_{a_i a_j}) upper-triangle entries, counter-indexed
// so the result depends only on (model, N, seed). Error: DimensionMismatch.
PopulationGraph generate(const SbmModel& model, int n, std::uint64_t seed);

// The four-class model used throughout the simulations.
Eigen::MatrixXd simulation_pi();
// Sparse scale matrix C of the sparse-regime simulations.
Eigen::MatrixXd sparse_simulation_c();

}  // namespace netsamp

#endif  // NETSAMP_POPULATION_HPP_
