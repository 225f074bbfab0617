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

#include "netsamp/population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netsamp/error.hpp"
#include "netsamp/rng.hpp"

namespace netsamp {

PopulationGraph::PopulationGraph(int n, std::vector<int> labels)
    : n_(n), words_(WordsFor(n)), bits_(std::size_t(n) * WordsFor(n), 0) {
  if (n < 0) Fail("DimensionMismatch", ErrorKind::kUsage, "negative N");
  set_labels(std::move(labels));
}

void PopulationGraph::set_labels(std::vector<int> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    Fail("DimensionMismatch", ErrorKind::kData,
         "label count " + std::to_string(labels.size()) + " != N " +
             std::to_string(n_));
  }
  labels_ = std::move(labels);
}

int PopulationGraph::degree(int i) const {
  int d = 0;
  const Word* r = row(i);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::int64_t PopulationGraph::edge_count() const {
  std::int64_t total = 0;
  for (int i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

void PopulationGraph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    Fail("IndexOutOfRange", ErrorKind::kData, "vertex outside 0..N-1");
  }
  if (i == j) return;
  mutable_row(i)[j >> 6] |= Word{1} << (j & 63);
  mutable_row(j)[i >> 6] |= Word{1} << (i & 63);
}

std::vector<std::pair<int, int>> PopulationGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    const Word* r = row(i);
    for (int w = (i + 1) >> 6; w < words_; ++w) {
      Word bits = r[w];
      while (bits != 0) {
        const int j = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (j > i) out.emplace_back(i, j);
      }
    }
  }
  return out;
}

namespace {

void CheckProbabilityMatrix(const Eigen::MatrixXd& m, bool unit_bounded,
                            bool positive_diagonal) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    Fail("InvalidModel", ErrorKind::kUsage, "matrix must be square, K >= 1");
  }
  for (int a = 0; a < m.rows(); ++a) {
    for (int b = 0; b < m.cols(); ++b) {
      const double v = m(a, b);
      if (!std::isfinite(v) || v < 0.0 || (unit_bounded && v > 1.0)) {
        Fail("InvalidModel", ErrorKind::kUsage, "matrix entry out of range");
      }
      if (v != m(b, a)) Fail("InvalidModel", ErrorKind::kUsage, "matrix not symmetric");
    }
  }
  if (positive_diagonal && m.diagonal().maxCoeff() <= 0.0) {
    Fail("InvalidModel", ErrorKind::kUsage, "all diagonal entries are zero");
  }
}

void CheckProportions(const Eigen::VectorXd& lambda, int k) {
  if (lambda.size() != k) {
    Fail("DimensionMismatch", ErrorKind::kUsage, "lambda length != K");
  }
  for (double v : lambda) {
    if (!(v > 0.0 && v <= 1.0)) {
      Fail("InvalidModel", ErrorKind::kUsage, "proportions must lie in (0,1]");
    }
  }
  if (std::abs(lambda.sum() - 1.0) > 1e-9) {
    Fail("InvalidModel", ErrorKind::kUsage, "proportions must sum to 1");
  }
}

}  // namespace

void SbmModel::validate() const {
  CheckProbabilityMatrix(pi, true, false);
  if (labels.empty()) {
    CheckProportions(lambda, classes());
  } else {
    for (int c : labels) {
      if (c < 1 || c > classes()) {
        Fail("DimensionMismatch", ErrorKind::kData, "label outside 1..K");
      }
    }
  }
}

void SparseSbmSpec::validate() const {
  CheckProbabilityMatrix(c, false, true);
  CheckProportions(lambda, static_cast<int>(c.rows()));
  if (!(beta >= 0.0 && beta < 1.0)) {
    Fail("InvalidModel", ErrorKind::kUsage, "beta must lie in [0,1)");
  }
}

std::vector<int> materialize_labels(const Eigen::VectorXd& lambda, int n) {
  const int k = static_cast<int>(lambda.size());
  std::vector<int> counts(k);
  std::vector<double> remainders(k);
  int assigned = 0;
  for (int c = 0; c < k; ++c) {
    const double quota = n * lambda[c];
    counts[c] = static_cast<int>(std::floor(quota));
    remainders[c] = quota - counts[c];
    assigned += counts[c];
  }
  // Largest remainders first; ties go to the lower class index.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return remainders[a] > remainders[b]; });
  for (int t = 0; assigned < n; ++t, ++assigned) ++counts[order[t % k]];
  std::vector<int> labels;
  labels.reserve(n);
  for (int c = 0; c < k; ++c) labels.insert(labels.end(), counts[c], c + 1);
  return labels;
}

Eigen::VectorXd label_proportions(const std::vector<int>& labels, int k) {
  Eigen::VectorXd freq = Eigen::VectorXd::Zero(k);
  for (int c : labels) {
    if (c < 1 || c > k) Fail("DimensionMismatch", ErrorKind::kData, "label outside 1..K");
    freq[c - 1] += 1.0;
  }
  if (!labels.empty()) freq /= static_cast<double>(labels.size());
  return freq;
}

std::vector<int> model_labels(const SbmModel& model, int n) {
  if (model.labels.empty()) return materialize_labels(model.lambda, n);
  if (static_cast<int>(model.labels.size()) != n) {
    Fail("DimensionMismatch", ErrorKind::kData, "label count != N");
  }
  return model.labels;
}

SbmModel materialize_sparse(const SparseSbmSpec& spec, int n) {
  spec.validate();
  const double scale = std::pow(static_cast<double>(n), -spec.beta);
  SbmModel model;
  model.pi = spec.c * scale;
  for (int a = 0; a < model.pi.rows(); ++a) {
    for (int b = 0; b < model.pi.cols(); ++b) {
      if (model.pi(a, b) > 1.0) {
        Fail("ProbabilityOverflow", ErrorKind::kNumeric,
             "N^-beta * C exceeds 1 at (" + std::to_string(a + 1) + "," +
                 std::to_string(b + 1) + ")");
      }
    }
  }
  model.lambda = spec.lambda;
  return model;
}

PopulationGraph generate(const SbmModel& model, int n, std::uint64_t seed) {
  if (n < 2) Fail("DimensionMismatch", ErrorKind::kUsage, "N must be >= 2");
  model.validate();
  std::vector<int> labels = model_labels(model, n);
  PopulationGraph g(n, labels);
  const std::uint64_t key = Mix64(seed, kPopulationDomain);
  std::vector<double> prob(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) prob[j] = model.pi(labels[i] - 1, labels[j] - 1);
    const std::uint64_t base = std::uint64_t(i) * std::uint64_t(n);
    for (int j = i + 1; j < n; ++j) {
      if (CounterUniform(key, base + j) < prob[j]) g.add_edge(i, j);
    }
  }
  return g;
}

Eigen::MatrixXd simulation_pi() {
  Eigen::MatrixXd pi(4, 4);
  pi << 0.26, 0.09, 0.05, 0.04,  //
      0.09, 0.30, 0.01, 0.03,    //
      0.05, 0.01, 0.27, 0.00,    //
      0.04, 0.03, 0.00, 0.17;
  return pi;
}

Eigen::MatrixXd sparse_simulation_c() {
  Eigen::MatrixXd c(4, 4);
  c << 1.0, 0.0, 0.25, 0.0,  //
      0.0, 2.0, 0.0, 0.3,    //
      0.25, 0.0, 2.0, 0.0,   //
      0.0, 0.3, 0.0, 1.0;
  return c;
}

}  // namespace netsamp
