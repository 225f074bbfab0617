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

// Normal quantiles and prediction intervals for subgraph counts, densities
// and the clustering coefficient.

#ifndef NETSAMP_INFERENCE_HPP_
#define NETSAMP_INFERENCE_HPP_

#include <string>

#include <Eigen/Dense>

#include "netsamp/pattern.hpp"
#include "netsamp/sampling.hpp"

namespace netsamp {

// Inverse standard normal CDF (rational approximation + one Halley step).
// Error: OutOfDomain.
double normal_quantile(double q);
// Standard normal CDF.
double normal_cdf(double x);

enum class Target { kCount, kDensity, kClustering };

struct PredictionInterval {
  Target target = Target::kCount;
  std::string pattern;     // motif name, "clustering" for the ratio target
  Scheme scheme = Scheme::kInduced;
  double level = 0.95;
  double point = 0.0;      // bias-corrected centre estimate
  double lower = 0.0;
  double upper = 0.0;
  double bias = 0.0;       // subtracted bias term (clustering, ego)
  double spread = 0.0;     // sigma (counts) or tau (clustering)
  bool feasible = true;    // bounds inside [0, N^R] / [0, 1]

  bool contains(double value) const { return lower <= value && value <= upper; }
  double length() const { return upper - lower; }
};

// Interval for S_N(H): shat / f -/+ z * sigma * N^{R-1/2}, with f = p^R
// (induced) or f(H,p) (ego). Errors: ZeroVariance, InvalidLevel.
PredictionInterval pi_subgraph(double shat, const PatternGraph& h, Scheme scheme,
                               const Eigen::MatrixXd& pi,
                               const Eigen::VectorXd& lambda, double p,
                               long long n, double level);

// Same interval with point and bounds divided by N^R.
PredictionInterval to_density(const PredictionInterval& count_interval,
                              int order, long long n);

// [G - z_{1-e/2} tau / sqrt(N) - b, G - z_{e/2} tau / sqrt(N) - b], b = 0
// for induced sampling. Errors: DegenerateTheta, InvalidLevel.
PredictionInterval pi_clustering(double gamma_hat, Scheme scheme,
                                 const Eigen::MatrixXd& pi,
                                 const Eigen::VectorXd& lambda, double p,
                                 long long n, double level,
                                 bool correct_bias = true);

}  // namespace netsamp

#endif  // NETSAMP_INFERENCE_HPP_
