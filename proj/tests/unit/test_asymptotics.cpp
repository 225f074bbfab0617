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

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "netsamp/asymptotics.hpp"
#include "netsamp/counting.hpp"
#include "netsamp/population.hpp"
#include "netsamp/rng.hpp"
#include "oracles.hpp"

using namespace netsamp;

namespace {

std::vector<PatternGraph> CanonicalPatterns() {
  std::vector<PatternGraph> out{canonical(MotifKind::kEdge), canonical(MotifKind::kWedge),
                                canonical(MotifKind::kTriangle)};
  for (int r = 4; r <= 5; ++r) {
    out.push_back(canonical(MotifKind::kComplete, r));
    out.push_back(canonical(MotifKind::kStar, r));
    out.push_back(canonical(MotifKind::kLine, r));
    out.push_back(canonical(MotifKind::kCircle, r));
  }
  return out;
}

}  // namespace

TEST_CASE("ego functionals: small closed forms and the decomposition identity") {
  CHECK(ego_functionals(canonical(MotifKind::kEdge), 0.5).f == doctest::Approx(0.75).epsilon(1e-15));
  for (const PatternGraph& h : CanonicalPatterns()) {
    for (double p = 0.05; p < 0.96; p += 0.05) {
      const EgoFunctionals e = ego_functionals(h, p);
      for (int r = 0; r < h.order(); ++r) {
        CHECK(std::abs(e.f - (p * e.g2[r] + (1 - p) * e.g1[r])) <= 1e-14);
        CHECK(e.delta[r] == doctest::Approx(e.g2[r] - e.g1[r]).epsilon(1e-14));
      }
    }
  }
  CHECK(inclusion_probability(canonical(MotifKind::kTriangle), 0.3, Scheme::kInduced) ==
        doctest::Approx(0.027).epsilon(1e-14));
}

TEST_CASE("eta table agrees with single-entry evaluation") {
  const Eigen::MatrixXd pi = simulation_pi();
  const Eigen::VectorXd lambda = Eigen::VectorXd::Constant(4, 0.25);
  for (const PatternGraph& h : {canonical(MotifKind::kWedge), canonical(MotifKind::kStar, 4)}) {
    const Eigen::MatrixXd table = eta_table(h, pi, lambda);
    for (int u = 1; u <= 4; ++u)
      for (int k = 1; k <= h.order(); ++k)
        CHECK(table(u - 1, k - 1) == doctest::Approx(eta(u, k, h, pi, lambda)).epsilon(1e-13));
  }
}

TEST_CASE("general variances reproduce the closed forms") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::RandomModel m = oracle::MakeRandomModel(rng, 1 + trial % 4);
    const double p = m.p;
    const auto s1 = [&](const PatternGraph& h) { return sigma2_induced(h, m.pi, m.lambda, p).sigma2; };
    const auto s2 = [&](const PatternGraph& h) { return sigma2_ego(h, m.pi, m.lambda, p).sigma2; };
    CHECK(oracle::RelErr(s1(canonical(MotifKind::kEdge)), oracle::EdgeInduced(m.pi, m.lambda, p)) < 1e-10);
    CHECK(oracle::RelErr(s2(canonical(MotifKind::kEdge)), oracle::EdgeEgo(m.pi, m.lambda, p)) < 1e-10);
    CHECK(oracle::RelErr(s1(canonical(MotifKind::kWedge)), oracle::WedgeInduced(m.pi, m.lambda, p)) < 1e-10);
    CHECK(oracle::RelErr(s2(canonical(MotifKind::kWedge)), oracle::WedgeEgo(m.pi, m.lambda, p)) < 1e-10);
    for (int r = 3; r <= 5; ++r) {
      const PatternGraph kr = canonical(MotifKind::kComplete, r);
      const PatternGraph sr = canonical(MotifKind::kStar, r);
      CHECK(oracle::RelErr(s1(kr), oracle::CompleteInduced(m.pi, m.lambda, p, r)) < 1e-10);
      CHECK(oracle::RelErr(s2(kr), oracle::CompleteEgo(m.pi, m.lambda, p, r)) < 1e-10);
      CHECK(oracle::RelErr(s1(sr), oracle::StarInduced(m.pi, m.lambda, p, r)) < 1e-10);
      CHECK(oracle::RelErr(s2(sr), oracle::StarEgo(m.pi, m.lambda, p, r)) < 1e-10);
    }
    const VarianceReport both = sigma2(canonical(MotifKind::kTriangle), m.pi, m.lambda, p, Scheme::kEgo);
    CHECK(both.sigma2 == s2(canonical(MotifKind::kTriangle)));
  }
}

TEST_CASE("variances are invariant under vertex relabelling of the pattern") {
  const Eigen::MatrixXd pi = simulation_pi();
  const Eigen::VectorXd lambda = Eigen::VectorXd::Constant(4, 0.25);
  const PatternGraph centre1 = canonical(MotifKind::kWedge);
  const PatternGraph centre2 = make_pattern(3, {{1, 2}, {2, 3}});
  for (Scheme scheme : {Scheme::kInduced, Scheme::kEgo}) {
    CHECK(oracle::RelErr(sigma2(centre2, pi, lambda, 0.3, scheme).sigma2,
                         sigma2(centre1, pi, lambda, 0.3, scheme).sigma2) < 1e-12);
  }
}

TEST_CASE("variance positivity on random models") {
  SplitMix64 rng(23);
  const std::vector<PatternGraph> patterns = CanonicalPatterns();
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::RandomModel m = oracle::MakeRandomModel(rng, 1 + trial % 3);
    const PatternGraph& h = patterns[trial % patterns.size()];
    CHECK(sigma2_induced(h, m.pi, m.lambda, m.p).sigma2 > 0.0);
    CHECK(sigma2_ego(h, m.pi, m.lambda, m.p).sigma2 > 0.0);
  }
}

TEST_CASE("joint covariance structure and the delta method") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::RandomModel m = oracle::MakeRandomModel(rng, 1 + trial % 4);
    for (Scheme scheme : {Scheme::kInduced, Scheme::kEgo}) {
      const Eigen::MatrixXd sigma = joint_covariance(m.pi, m.lambda, m.p, scheme);
      CHECK((sigma - sigma.transpose()).norm() <= 1e-15 * sigma.norm());
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
      CHECK(es.eigenvalues().minCoeff() >= -1e-10);
      CHECK(sigma.bottomRows(3).norm() == 0.0);
      const double tau2 = clustering_asymptotics(m.pi, m.lambda, m.p, scheme).tau2;
      // One-class induced models are degenerate (tau2 = 0 exactly).
      const double delta = oracle::DeltaMethodTau2(m.pi, m.lambda, m.p, scheme);
      CHECK(std::abs(tau2 - delta) <= 1e-10 * std::abs(delta) + 1e-13);
      const double precise = oracle::DeltaMethodTau2Precise(m.pi, m.lambda, m.p, scheme);
      CHECK(std::abs(tau2 - precise) <= 1e-10 * std::abs(precise) + 1e-15);
    }
  }
}

TEST_CASE("ego clustering bias") {
  const Eigen::MatrixXd pi = simulation_pi();
  const Eigen::VectorXd lambda = Eigen::VectorXd::Constant(4, 0.25);
  const ThetaSet t = theta_set(pi, lambda);
  for (double p : {0.05, 0.1, 0.5, 0.9}) {
    const double want = -(1 - p) * (1 - p) / (p * (1 - p) + 1) * t.theta2 / t.theta1;
    CHECK(clustering_asymptotics(pi, lambda, p, Scheme::kEgo).bias == doctest::Approx(want).epsilon(1e-13));
    CHECK(clustering_asymptotics(pi, lambda, p, Scheme::kInduced).bias == 0.0);
  }
  CHECK(std::abs(clustering_asymptotics(pi, lambda, 0.999999, Scheme::kEgo).bias) < 1e-10);
  // Limit means of the estimated clustering coefficient differ by the bias.
  const Eigen::Vector2d means = estimated_clustering_means(t, 0.2, Scheme::kEgo);
  CHECK(means[1] / means[0] - t.theta2 / t.theta1 ==
        doctest::Approx(clustering_asymptotics(pi, lambda, 0.2, Scheme::kEgo).bias).epsilon(1e-12));
  CHECK(oracle::ErrorCode([&] {
          clustering_asymptotics(Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Ones(1), 0.2, Scheme::kEgo);
        }) == "DegenerateTheta");
}

TEST_CASE("theta ratio matches the clustering coefficient of a large simulated graph") {
  const Eigen::MatrixXd pi = simulation_pi();
  const Eigen::VectorXd lambda = Eigen::VectorXd::Constant(4, 0.25);
  const ThetaSet t = theta_set(pi, lambda);
  const PopulationGraph g = generate(SbmModel{pi, {}, lambda}, 2000, 4);
  CHECK(std::abs(clustering_population(g) - t.theta2 / t.theta1) < 0.005);
}

TEST_CASE("design-ignored conditional moments") {
  Eigen::Matrix2d pi;
  pi << 0.3, 0.1, 0.1, 0.2;
  // Printed expressions evaluated at a = 0.
  const ConditionalMoments printed0 = conditional_demo_constants(0.0, 0.4, pi);
  CHECK(printed0.mu == doctest::Approx(-0.3 - 0.1 - 0.2 / 4).epsilon(1e-14));
  CHECK(conditional_demo_constants(0.5, 0.4, pi).sigma2 > 0.0);
  CHECK(conditional_demo_recomputed(0.5, 0.4, pi).sigma2 > 0.0);
  CHECK(conditional_demo_recomputed(0.5, 0.4, pi).mu != 0.0);

  // Monte-Carlo of the conditional experiment: odd vertices are class 1 and
  // the first floor(N a / 2) of them are selected; only Y is random.
  const int n = 400;
  const double a = 0.5, p = 0.4;
  const int m = static_cast<int>(std::floor(n * a / 2));
  std::vector<int> cls(n), w(n, 0);
  for (int i = 0; i < n; ++i) {
    cls[i] = (i % 2 == 0) ? 0 : 1;  // vertex i+1 odd -> class 1
    if (i % 2 == 0 && i / 2 < m) w[i] = 1;
  }
  SplitMix64 rng(2718);
  const int reps = 400;
  double sum = 0.0, sum_sq = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double y = rng.Uniform() < pi(cls[i], cls[j]) ? 1.0 : 0.0;
        v += 2.0 * (w[i] * w[j] / (p * p) - 1.0) * y;
      }
    sum += v / n;
    sum_sq += (v / n) * (v / n);
  }
  const double mean_over_n = sum / reps / n;  // estimates mu
  const double var = sum_sq / reps - (sum / reps) * (sum / reps);
  const ConditionalMoments fixed = conditional_demo_recomputed(a, p, pi);
  const ConditionalMoments print = conditional_demo_constants(a, p, pi);
  const double mean_se = std::sqrt(fixed.sigma2 / reps) / n;
  CHECK(std::abs(mean_over_n - fixed.mu) < 4.0 * mean_se + 2.0 / n);
  CHECK(std::abs(var / fixed.sigma2 - 1.0) < 0.3);
  // The printed expressions do not describe this experiment.
  CHECK(std::abs(mean_over_n - print.mu) > 0.05);
}

TEST_CASE("pivots") {
  const PatternGraph edge = canonical(MotifKind::kEdge);
  CHECK(pivot_induced(1000, edge, 0.04 * 5000.0, 5000.0, 1.0, 0.2) == doctest::Approx(0.0));
  CHECK(pivot_induced(1000, edge, 300.0, 5000.0, 1.0, 0.2) > 0.0);
  CHECK(pivot_ego(1000, edge, 100.0, 5000.0, 1.0, 0.2) < 0.0);
  CHECK(oracle::ErrorCode([&] { pivot_induced(1000, edge, 1.0, 1.0, 0.0, 0.2); }) == "ZeroVariance");
}
