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


#include <cmath>
#include <vector>

#include "doctest.h"
#include "netsamp/estimation.hpp"
#include "netsamp/population.hpp"
#include "oracles.hpp"

using namespace netsamp;

namespace {

// Brute-force cell densities over observed pairs.
Eigen::MatrixXd BrutePi(const SampleView& view, const std::vector<int>& labels, int k) {
  Eigen::MatrixXd pairs = Eigen::MatrixXd::Zero(k, k), edges = Eigen::MatrixXd::Zero(k, k);
  const PopulationGraph& g = *view.population;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (labels[i] == 0 || labels[j] == 0 || !view.is_observed(i, j)) continue;
      const int a = std::min(labels[i], labels[j]) - 1, b = std::max(labels[i], labels[j]) - 1;
      pairs(a, b) += 1;
      edges(a, b) += g.edge(i, j);
    }
  Eigen::MatrixXd pi(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) pi(a, b) = pi(b, a) = edges(a, b) / pairs(a, b);
  return pi;
}

PopulationGraph TwoBlocks(int half) {
  std::vector<int> labels(2 * half);
  for (int i = 0; i < 2 * half; ++i) labels[i] = i < half ? 1 : 2;
  PopulationGraph g(2 * half, labels);
  for (int i = 0; i < 2 * half; ++i)
    for (int j = i + 1; j < 2 * half; ++j)
      if (labels[i] == labels[j]) g.add_edge(i, j);
  return g;
}

SbmModel SimulationModel() { return SbmModel{simulation_pi(), {}, Eigen::VectorXd::Constant(4, 0.25)}; }

}  // namespace

TEST_CASE("naive_mle_pi matches pair enumeration") {
  const SbmModel model = SimulationModel();
  const PopulationGraph g = generate(model, 300, 5);
  std::vector<int> labels = g.labels();
  labels[7] = 0;  // an unlabelled vertex is ignored
  for (Scheme scheme : {Scheme::kInduced, Scheme::kEgo}) {
    const SampleView view{&g, bernoulli_select(300, 0.3, 9), scheme};
    const PiEstimate est = naive_mle_pi(view, labels, 4);
    const Eigen::MatrixXd want = BrutePi(view, labels, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(est.pi(a, b) == doctest::Approx(want(a, b)).epsilon(1e-14));
    CHECK_FALSE(est.any_missing);
  }
}

TEST_CASE("naive_mle_pi edge cases") {
  const PopulationGraph g = TwoBlocks(5);
  const SampleView full{&g, mask_from_indicators(std::vector<int>(10, 1), 0.5), Scheme::kInduced};
  const PiEstimate est = naive_mle_pi(full, g.labels(), 2);
  CHECK(est.pi(0, 0) == 1.0);
  CHECK(est.pi(0, 1) == 0.0);
  CHECK(est.pi(1, 1) == 1.0);
  PopulationGraph pair(3, {1, 1, 1});
  pair.add_edge(0, 1);
  const SampleView one{&pair, mask_from_indicators({1, 1, 0}, 0.5), Scheme::kInduced};
  CHECK(naive_mle_pi(one, pair.labels(), 1).pi(0, 0) == 1.0);
  const SampleView none{&g, mask_from_indicators({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 0.5), Scheme::kInduced};
  const PiEstimate empty = naive_mle_pi(none, g.labels(), 2);
  CHECK(empty.any_missing);
  CHECK(std::isnan(empty.pi(1, 1)));
}

TEST_CASE("naive_mle_pi concentrates around the block probability") {
  const SbmModel model = SimulationModel();
  const PopulationGraph g = generate(model, 2000, 12);
  const SampleView view{&g, bernoulli_select(2000, 0.1, 3), Scheme::kInduced};
  const PiEstimate est = naive_mle_pi(view, g.labels(), 4);
  const double se = std::sqrt(0.26 * 0.74 / est.pairs(0, 0));
  CHECK(std::abs(est.pi(0, 0) - 0.26) < 4.0 * se);
  // Full observation: consistency as N grows.
  for (int n : {500, 2000}) {
    const PopulationGraph h = generate(model, n, 40 + n);
    const SampleView all{&h, mask_from_indicators(std::vector<int>(n, 1), 0.5), Scheme::kInduced};
    const Eigen::MatrixXd pi = naive_mle_pi(all, h.labels(), 4).pi;
    CHECK((pi - simulation_pi()).cwiseAbs().maxCoeff() < (n == 500 ? 0.03 : 0.015));
  }
}

TEST_CASE("spectral labels") {
  const PopulationGraph blocks = TwoBlocks(20);
  const SampleView view{&blocks, mask_from_indicators(std::vector<int>(40, 1), 0.5), Scheme::kInduced};
  CHECK(best_permutation_agreement(blocks.labels(), spectral_labels(view, 2)) == 1.0);
  CHECK(oracle::ErrorCode([&] { spectral_labels(view, 1); }) == "InvalidK");
  const SampleView tiny{&blocks, mask_from_indicators(std::vector<int>(40, 0), 0.5), Scheme::kInduced};
  CHECK(oracle::ErrorCode([&] { spectral_labels(tiny, 2); }) == "TooFewSelectedNodes");

  const SbmModel model = SimulationModel();
  const PopulationGraph g = generate(model, 2000, 77);
  const SampleView sample{&g, bernoulli_select(2000, 0.2, 78), Scheme::kInduced};
  const std::vector<int> labels = spectral_labels(sample, 4, SpectralOptions{10, 300, 1e-9, 1});
  std::vector<int> truth(2000, 0);
  for (int v : sample.mask.selected_vertices()) truth[v] = g.labels()[v];
  CHECK(best_permutation_agreement(truth, labels) > 0.85);
  CHECK(labels == spectral_labels(sample, 4, SpectralOptions{10, 300, 1e-9, 1}));
}

TEST_CASE("number of communities") {
  const PopulationGraph blocks = TwoBlocks(30);
  const SampleView two{&blocks, mask_from_indicators(std::vector<int>(60, 1), 0.5), Scheme::kInduced};
  CHECK(estimate_K(two) == 2);
  SbmModel er{Eigen::MatrixXd::Constant(1, 1, 0.3), {}, Eigen::VectorXd::Ones(1)};
  const PopulationGraph g1 = generate(er, 1000, 3);
  CHECK(estimate_K(SampleView{&g1, bernoulli_select(1000, 0.3, 4), Scheme::kInduced}) == 1);
  const SbmModel model = SimulationModel();
  int hits = 0;
  const int reps = 20;
  for (int rep = 0; rep < reps; ++rep) {
    const PopulationGraph g = generate(model, 5000, 500 + rep);
    hits += estimate_K(SampleView{&g, bernoulli_select(5000, 0.05, 600 + rep), Scheme::kInduced}) == 4;
  }
  CHECK(hits >= 19);  // at least 95%
}

TEST_CASE("class proportions") {
  const Eigen::VectorXd l = lambda_hat({1, 1, 2, 2, 0}, 2);
  CHECK(l[0] == 0.5);
  CHECK(l[1] == 0.5);
  CHECK(lambda_hat({1, 1, 1}, 1)[0] == 1.0);
  CHECK(oracle::ErrorCode([] { lambda_hat({0, 0}, 2); }) == "NoLabels");
  SplitMix64 rng(4);
  std::vector<int> labels(400);
  for (int& x : labels) x = 1 + static_cast<int>(rng() % 4);
  const Eigen::VectorXd est = lambda_hat(labels, 4);
  for (int c = 0; c < 4; ++c) CHECK(std::abs(est[c] - 0.25) < 4 * std::sqrt(0.1875 / 400));
}

TEST_CASE("estimate_params scenarios") {
  const SbmModel model = SimulationModel();
  const PopulationGraph g = generate(model, 1000, 8);
  const SampleView view{&g, bernoulli_select(1000, 0.2, 9), Scheme::kEgo};
  const EstimatedParams c1 = estimate_params(view, Scenario::kC1, model);
  CHECK(c1.pi_hat == model.pi);
  CHECK(c1.k_hat == 4);
  const EstimatedParams c2 = estimate_params(view, Scenario::kC2, model);
  CHECK(c2.pi_hat == naive_mle_pi(view, g.labels(), 4).pi);
  const EstimatedParams c3 = estimate_params(view, Scenario::kC3, model);
  CHECK(c3.k_hat == 4);
  CHECK(c3.lambda_hat.sum() == doctest::Approx(1.0));
  const EstimatedParams c4 = estimate_params(view, Scenario::kC4, model);
  CHECK(c4.k_hat >= 1);
  CHECK(parse_scenario("c3") == Scenario::kC3);
  CHECK(to_string(Scenario::kC4) == "c4");
  CHECK(oracle::ErrorCode([] { parse_scenario("c5"); }) == "UsageError");
}
