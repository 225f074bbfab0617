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

// Block-model parameter estimation from a sampled view under four
// information scenarios: true parameters (c1), known labels (c2), spectral
// labels with known K (c3) and spectral labels with estimated K (c4).

#ifndef NETSAMP_ESTIMATION_HPP_
#define NETSAMP_ESTIMATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netsamp/population.hpp"
#include "netsamp/sampling.hpp"

namespace netsamp {

enum class Scenario { kC1, kC2, kC3, kC4 };

std::string to_string(Scenario scenario);
Scenario parse_scenario(const std::string& text);  // Error: UsageError

// Cell-wise naive estimate over the scheme's observed pairs. Cells without
// any observed labelled pair are NaN and flagged in `missing`.
struct PiEstimate {
  Eigen::MatrixXd pi;
  Eigen::MatrixXd pairs;   // observed unordered pairs per cell
  Eigen::MatrixXd edges;   // observed edges per cell
  bool any_missing = false;
};

// `labels` has length N with values 1..K, 0 marking unlabelled vertices.
// Error: DimensionMismatch.
PiEstimate naive_mle_pi(const SampleView& view, const std::vector<int>& labels,
                        int k);

struct SpectralOptions {
  int restarts = 10;        // k-means++ restarts (capped at 100)
  int max_iterations = 300;
  double tolerance = 1e-9;  // relative inertia change
  std::uint64_t seed = 0;
};

// Ratio-of-eigenvectors spectral clustering of the selected-vertex induced
// subgraph. Returns length-N labels in 1..K for selected vertices, 0 for the
// rest. Errors: InvalidK, TooFewSelectedNodes.
std::vector<int> spectral_labels(const SampleView& view, int k,
                                 const SpectralOptions& options = {});

// Number of communities from the spectrum of the selected-vertex induced
// subgraph. Error: EmptyObservation.
int estimate_K(const SampleView& view);

// Frequencies of labels 1..K among labelled (non-zero) entries.
// Error: NoLabels.
Eigen::VectorXd lambda_hat(const std::vector<int>& labels, int k);

struct EstimatedParams {
  Scenario scenario = Scenario::kC1;
  int k_hat = 0;
  std::vector<int> labels_hat;  // length N, 0 = unlabelled
  Eigen::MatrixXd pi_hat;
  Eigen::VectorXd lambda_hat;
  bool any_missing = false;     // some pi_hat cell had no observed pair
};

// Parameters for variance plug-in under `scenario`. `truth` supplies the
// true Pi (c1) and true labels (c1, c2); its labels must cover all N.
EstimatedParams estimate_params(const SampleView& view, Scenario scenario,
                                const SbmModel& truth,
                                const SpectralOptions& options = {});

// Largest fraction of vertices whose labels agree after the best
// permutation of estimated classes (evaluation only; K <= 8).
double best_permutation_agreement(const std::vector<int>& truth,
                                  const std::vector<int>& estimate);

}  // namespace netsamp

#endif  // NETSAMP_ESTIMATION_HPP_
