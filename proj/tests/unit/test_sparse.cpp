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
#include "netsamp/population.hpp"
#include "netsamp/sparse.hpp"
#include "oracles.hpp"

using namespace netsamp;

TEST_CASE("f1 small values") {
  CHECK(f1(canonical(MotifKind::kTriangle), 2) == 1);
  CHECK(f1(canonical(MotifKind::kStar, 4), 3) == 2);
  CHECK(f1_intersection_oracle(canonical(MotifKind::kStar, 4), 3) == 2);
  CHECK(f1(canonical(MotifKind::kComplete, 5), 5) == 10);
  CHECK(oracle::ErrorCode([] { f1(canonical(MotifKind::kEdge), 3); }) == "IndexOutOfRange");
  CHECK(oracle::ErrorCode([] { f1_intersection_oracle(canonical(MotifKind::kLine, 7), 3); }) ==
        "PatternTooLarge");
  CHECK(densest_subset(canonical(MotifKind::kStar, 4), 2) == std::vector<int>{1, 2});
}

TEST_CASE("f1 agrees with subset enumeration and the intersection oracle") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 3 + trial % 4;
    const PatternGraph h = oracle::RandomConnectedPattern(rng, r, 0.35);
    for (int t = 2; t <= r; ++t) {
      CHECK(f1(h, t) == oracle::BruteF1(h, t));
      CHECK(f1(h, t) == f1_intersection_oracle(h, t));
    }
  }
}

TEST_CASE("threshold table") {
  for (int r = 2; r <= 8; ++r) CHECK(c_of_H(canonical(MotifKind::kComplete, r)) == doctest::Approx(2.0 / r).epsilon(1e-15));
  for (int r = 3; r <= 8; ++r) {
    CHECK(c_of_H(canonical(MotifKind::kStar, r)) == 1.0);
    CHECK(c_of_H(canonical(MotifKind::kLine, r)) == 1.0);
    CHECK(c_of_H(canonical(MotifKind::kCircle, r)) == doctest::Approx(1.0 - 1.0 / r).epsilon(1e-15));
  }
  CHECK(c_of_H(canonical(MotifKind::kComplete, 4)) == 0.5);
  CHECK(c_of_H(canonical(MotifKind::kCircle, 5)) == doctest::Approx(0.8).epsilon(1e-15));
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m + n - 1 <= 8; ++m)
      CHECK(c_of_H(line_circle(m, n)) == doctest::Approx(1.0 - 1.0 / n).epsilon(1e-15));
  for (int r = 4; r <= 8; r += 2)
    CHECK(c_of_H(cocktail_party(r)) == doctest::Approx((2.0 / r) * (r - 1.0) / (r - 2.0)).epsilon(1e-15));
  const SparseProfile prof = sparse_profile(canonical(MotifKind::kTriangle));
  CHECK(prof.order == 3);
  CHECK(prof.size == 3);
  CHECK(prof.f1_values == std::vector<int>{1, 3});
  CHECK(prof.c == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("sparse variance") {
  const Eigen::MatrixXd c = sparse_simulation_c();
  const Eigen::VectorXd lambda = Eigen::VectorXd::Constant(4, 0.25);
  const PatternGraph k3 = canonical(MotifKind::kTriangle);
  const SparseVariance ok = sparse_variance(k3, c, lambda, 0.1, 0.5);
  CHECK(ok.admissible);
  CHECK(ok.report.sigma2 > 0.0);
  CHECK(ok.scale_exponent == doctest::Approx(-3 + 0.5 + 3 * 0.5));
  CHECK_FALSE(sparse_variance(k3, c, lambda, 0.1, 0.7).admissible);
  CHECK(oracle::ErrorCode([&] { sparse_variance(k3, c, lambda, 0.1, 1.2); }) == "InvalidModel");
  // beta = 0 reduces to the dense induced variance with Pi = C.
  const Eigen::MatrixXd pi = simulation_pi();
  CHECK(sparse_variance(k3, pi, lambda, 0.2, 0.0).report.sigma2 ==
        doctest::Approx(sigma2_induced(k3, pi, lambda, 0.2).sigma2).epsilon(1e-14));
}
