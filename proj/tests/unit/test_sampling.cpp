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
#include "netsamp/sampling.hpp"
#include "oracles.hpp"

using namespace netsamp;

TEST_CASE("bernoulli_select") {
  CHECK(bernoulli_select(10, 1e-12, 3).count() == 0);
  const int n = 100000;
  const SampleMask mask = bernoulli_select(n, 0.1, 99);
  CHECK(std::abs(mask.count() / double(n) - 0.1) < 4.0 * std::sqrt(0.09 / n));
  CHECK(bernoulli_select(5, 0.5, 42).bits == bernoulli_select(5, 0.5, 42).bits);
  CHECK(oracle::ErrorCode([] { bernoulli_select(5, 0.0, 1); }) == "InvalidProbability");
  CHECK(oracle::ErrorCode([] { bernoulli_select(5, 1.0, 1); }) == "InvalidProbability");
  // Prefix stability: vertex i's draw does not depend on N.
  const SampleMask small = bernoulli_select(50, 0.3, 8);
  const SampleMask large = bernoulli_select(500, 0.3, 8);
  for (int i = 0; i < 50; ++i) CHECK(small.selected(i) == large.selected(i));
}

TEST_CASE("observation rules") {
  PopulationGraph g(3);
  SampleView induced{&g, mask_from_indicators({1, 0, 1}, 0.5), Scheme::kInduced};
  SampleView ego{&g, mask_from_indicators({1, 0, 1}, 0.5), Scheme::kEgo};
  CHECK_FALSE(induced.is_observed(0, 1));
  CHECK(ego.is_observed(0, 1));
  CHECK(induced.is_observed(0, 2));
  CHECK(ego.is_observed(0, 2));
  CHECK(oracle::ErrorCode([&] { ego.is_observed(1, 1); }) == "SelfPairQueried");
}

TEST_CASE("inclusion_weight") {
  const PatternGraph triangle = canonical(MotifKind::kTriangle);
  const PatternGraph path = make_pattern(3, {{1, 2}, {2, 3}});  // centre 2
  const std::vector<int> tuple{0, 1, 2};
  CHECK(inclusion_weight(triangle, Scheme::kInduced, tuple, mask_from_indicators({1, 1, 1}, 0.5)) == 1);
  CHECK(inclusion_weight(path, Scheme::kEgo, tuple, mask_from_indicators({1, 0, 1}, 0.5)) == 1);
  CHECK(inclusion_weight(triangle, Scheme::kEgo, tuple, mask_from_indicators({1, 0, 0}, 0.5)) == 0);
  CHECK(inclusion_weight(triangle, Scheme::kEgo, tuple, mask_from_indicators({1, 1, 0}, 0.5)) == 1);
  const std::vector<int> repeated{0, 0, 2};
  CHECK(oracle::ErrorCode([&] {
          inclusion_weight(triangle, Scheme::kEgo, repeated, mask_from_indicators({1, 1, 1}, 0.5));
        }) == "NonDistinctTuple");
}

TEST_CASE("scheme names round-trip") {
  CHECK(parse_scheme(to_string(Scheme::kInduced)) == Scheme::kInduced);
  CHECK(parse_scheme(to_string(Scheme::kEgo)) == Scheme::kEgo);
  CHECK(oracle::ErrorCode([] { parse_scheme("snowball"); }) == "UsageError");
}
