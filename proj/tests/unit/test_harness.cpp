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
#include <sstream>
#include <string>

#include "doctest.h"
#include "netsamp/counting.hpp"
#include "netsamp/harness.hpp"
#include "oracles.hpp"

using namespace netsamp;

namespace {

ExperimentConfig SmallConfig() {
  ExperimentConfig c = default_experiment();
  c.n = 300;
  c.replicates = 12;
  c.p_grid = {0.2, 0.4};
  c.scenarios = {Scenario::kC1, Scenario::kC2};
  c.uncorrected_clustering = true;
  c.seed = 99;
  return c;
}

std::string CoverageCsv(ExperimentConfig c, int threads) {
  c.threads = threads;
  std::ostringstream out;
  write_coverage_csv(c, run_coverage(c), out);
  return out.str();
}

}  // namespace

TEST_CASE("coverage CSV is identical for any worker count") {
  const ExperimentConfig c = SmallConfig();
  const std::string one = CoverageCsv(c, 1);
  CHECK(one == CoverageCsv(c, 3));
  CHECK(one == CoverageCsv(c, 8));
  CHECK(one.rfind("# n=300\n", 0) == 0);
  CHECK(one.find("# seed=99\n") != std::string::npos);
  ExperimentConfig other = c;
  other.seed = 100;
  CHECK(one != CoverageCsv(other, 1));
}

TEST_CASE("coverage rows: layout and length monotone in p") {
  ExperimentConfig c = SmallConfig();
  c.scenarios = {Scenario::kC1};
  c.p_grid = {0.1, 0.2, 0.3};
  const std::vector<CoverageRow> rows = run_coverage(c);
  // 4 targets x 2 schemes x 3 p + uncorrected ego clustering x 3 p.
  CHECK(rows.size() == 4 * 2 * 3 + 3);
  for (const CoverageRow& r : rows) {
    CHECK(r.coverage >= 0.0);
    CHECK(r.coverage <= 1.0);
    CHECK(r.replicates + r.failures == c.replicates);
  }
  // Lengths shrink with p for every target except the ego clustering
  // coefficient, whose limiting spread rises then falls in p.
  for (const CoverageRow& a : rows)
    for (const CoverageRow& b : rows)
      if (a.target == b.target && a.scheme == b.scheme && a.p < b.p &&
          !(a.scheme == Scheme::kEgo && a.target.rfind("clustering", 0) == 0))
        CHECK(b.avg_length < a.avg_length);
}

TEST_CASE("bias-estimate accuracy and sparse pivots are deterministic") {
  ExperimentConfig c = SmallConfig();
  c.scenarios = {Scenario::kC2};
  c.p_grid = {0.3};
  const std::vector<ArbRow> a = arb_bias(c);
  REQUIRE(a.size() == 1);
  CHECK(a[0].arb_percent >= 0.0);
  c.scenarios = {Scenario::kC1};
  CHECK(arb_bias(c)[0].arb_percent == doctest::Approx(0.0).epsilon(1e-12));

  ExperimentConfig s = default_experiment();
  s.pi = sparse_simulation_c();
  s.beta = 0.2;
  s.n = 300;
  s.replicates = 10;
  s.p_grid = {0.3};
  s.motifs = {"edge"};
  s.threads = 1;
  std::ostringstream x, y;
  write_pivot_csv(s, run_sparse_clt(s), x);
  s.threads = 4;
  write_pivot_csv(s, run_sparse_clt(s), y);
  CHECK(x.str() == y.str());
}

TEST_CASE("ks distance") {
  CHECK(ks_distance_normal({0.0}) == doctest::Approx(0.5));
  std::vector<double> grid;
  for (int i = 1; i < 1000; ++i) grid.push_back(normal_quantile(i / 1000.0));
  CHECK(ks_distance_normal(grid) < 0.0011);
}

TEST_CASE("analysis of a fully observed network returns the truth") {
  SbmModel model{simulation_pi(), {}, Eigen::VectorXd::Constant(4, 0.25)};
  const PopulationGraph g = generate(model, 200, 3);
  const AnalysisReport r = analyze_graph(g, 1.0 - 1e-12, Scheme::kInduced, 0.95, 1);
  CHECK(r.selected == 200);
  REQUIRE(r.rows.size() == 4);
  for (const AnalysisRow& row : r.rows) CHECK(row.interval.point == doctest::Approx(row.true_value).epsilon(1e-9));
  CHECK(r.rows[3].true_value == clustering_population(g));
  PopulationGraph unlabelled(5);
  CHECK(oracle::ErrorCode([&] { analyze_graph(unlabelled, 0.5, Scheme::kEgo, 0.95, 1); }) == "LabelMismatch");
}

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.0) == "2");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("config validation") {
  ExperimentConfig c = default_experiment();
  c.replicates = 0;
  CHECK(oracle::ErrorCode([&] { c.validate(); }) == "UsageError");
  c = default_experiment();
  c.p_grid = {1.5};
  CHECK(oracle::ErrorCode([&] { c.validate(); }) == "UsageError");
}
