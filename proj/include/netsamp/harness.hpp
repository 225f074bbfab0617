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

// Monte-Carlo experiments (coverage, bias-estimate accuracy, sparse pivots)
// and the single-sample analysis workflow for observed networks.

#ifndef NETSAMP_HARNESS_HPP_
#define NETSAMP_HARNESS_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netsamp/estimation.hpp"
#include "netsamp/inference.hpp"
#include "netsamp/sampling.hpp"

namespace netsamp {

struct ExperimentConfig {
  int n = 2000;
  std::vector<double> p_grid{0.1};
  int replicates = 500;
  std::vector<Scheme> schemes{Scheme::kInduced, Scheme::kEgo};
  std::vector<Scenario> scenarios{Scenario::kC1};
  double level = 0.95;
  Eigen::MatrixXd pi;              // dense Pi, or the sparse scale C
  Eigen::VectorXd lambda;
  double beta = 0.0;               // > 0 selects Pi_N = N^-beta C
  std::uint64_t seed = 1;
  std::vector<std::string> motifs{"edge", "wedge", "triangle"};
  bool clustering = true;
  bool uncorrected_clustering = false;  // extra ego rows without bias term
  int threads = 0;                      // 0 = hardware concurrency
  SpectralOptions spectral;

  void validate() const;  // Error: UsageError
};

// Defaults: the four-class simulation model with equal proportions.
ExperimentConfig default_experiment();

struct CoverageRow {
  std::string target;   // motif name (density target) or "clustering"
  Scheme scheme = Scheme::kInduced;
  Scenario scenario = Scenario::kC1;
  double p = 0.0;
  double coverage = 0.0;
  double avg_length = 0.0;
  int replicates = 0;   // replicates with a valid interval
  int failures = 0;     // replicates whose estimation failed
  double mean_error = 0.0;  // mean of (uncorrected estimate - truth)
  double sd_error = 0.0;    // standard deviation of the same
};

std::vector<CoverageRow> run_coverage(const ExperimentConfig& config);

struct ArbRow {
  Scenario scenario = Scenario::kC2;
  double p = 0.0;
  double true_bias = 0.0;
  double arb_percent = 0.0;
  int replicates = 0;
  int failures = 0;
};

// Average relative error of the plug-in ego clustering bias.
// Error: ZeroTrueBias.
std::vector<ArbRow> arb_bias(const ExperimentConfig& config);

struct PivotSummary {
  std::string motif;
  double beta = 0.0;
  bool admissible = true;
  double mean = 0.0;
  double variance = 0.0;
  double ks_distance = 0.0;
  std::vector<double> bin_edges;  // histogram edges
  std::vector<int> bin_counts;
  std::vector<double> pivots;     // replicate order
};

// Induced-sampling pivots N^{-R+1/2+T beta} (shat/p^R - S) / tau, with tau
// from the scale matrix; uses the first entry of p_grid.
std::vector<PivotSummary> run_sparse_clt(const ExperimentConfig& config);

// Kolmogorov distance between the empirical CDF and the standard normal.
double ks_distance_normal(std::vector<double> values);

struct AnalysisRow {
  std::string target;
  double true_value = 0.0;
  PredictionInterval interval;
};

struct AnalysisReport {
  int n = 0;
  long long dropped_isolated = 0;
  Eigen::MatrixXd pi;       // class-pair densities of the whole network
  Eigen::VectorXd lambda;   // class proportions
  int selected = 0;
  std::vector<AnalysisRow> rows;  // edge, wedge, triangle density; clustering
};

// Loads the network (directed input symmetrised, isolated vertices
// dropped), computes the true block parameters from the labels, draws one
// Bernoulli(p) sample and reports intervals for the four targets.
AnalysisReport analyze_real(const std::string& edge_path,
                            const std::string& label_path, double p,
                            Scheme scheme, double level, std::uint64_t seed);

// Same analysis on an already loaded, labelled graph.
AnalysisReport analyze_graph(const PopulationGraph& graph, double p,
                             Scheme scheme, double level, std::uint64_t seed);

// CSV with a "# key=value" config echo.
void write_coverage_csv(const ExperimentConfig& config,
                        const std::vector<CoverageRow>& rows, std::ostream& out);
void write_arb_csv(const ExperimentConfig& config, const std::vector<ArbRow>& rows,
                   std::ostream& out);
void write_pivot_csv(const ExperimentConfig& config,
                     const std::vector<PivotSummary>& rows, std::ostream& out);
void write_config_echo(const ExperimentConfig& config, std::ostream& out);

// Shortest round-trip decimal form used in every CSV.
std::string format_number(double value);

}  // namespace netsamp

#endif  // NETSAMP_HARNESS_HPP_
