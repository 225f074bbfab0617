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

// Limiting variances of the Horvitz-Thompson subgraph-count estimators,
// ego-centric inclusion functionals, clustering-coefficient asymptotics and
// the joint edge/wedge/triangle covariance.

#ifndef NETSAMP_ASYMPTOTICS_HPP_
#define NETSAMP_ASYMPTOTICS_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netsamp/pattern.hpp"
#include "netsamp/sampling.hpp"

namespace netsamp {

// Largest supported K^R for the class-vector enumeration (6^8).
inline constexpr long long kMaxClassTuples = 1679616;

// Expected edge product with vertex k fixed to class u1 and the other
// vertices drawn i.i.d. from lambda; entry (u1-1, k-1). Error: ModelTooLarge.
Eigen::MatrixXd eta_table(const PatternGraph& h, const Eigen::MatrixXd& pi,
                          const Eigen::VectorXd& lambda);
double eta(int u1, int k, const PatternGraph& h, const Eigen::MatrixXd& pi,
           const Eigen::VectorXd& lambda);

struct VarianceReport {
  double sigma2 = 0.0;
  Scheme scheme = Scheme::kInduced;
  std::string pattern;
  std::vector<double> components;  // per-class summands lambda_u [..]^2
};

// (1/p - 1) sum_u lambda_u [sum_k eta(u,k)]^2.
VarianceReport sigma2_induced(const PatternGraph& h, const Eigen::MatrixXd& pi,
                              const Eigen::VectorXd& lambda, double p);

struct EgoFunctionals {
  double f = 0.0;              // P(every pattern edge observed)
  std::vector<double> delta;   // delta_r = g2_r - g1_r
  std::vector<double> g1;      // E[prod_{A^c(r)} max * prod_{N(r)} W]
  std::vector<double> g2;      // E[prod_{A^c(r)} max]
};

// Exact expectations over all 2^R indicator configurations.
EgoFunctionals ego_functionals(const PatternGraph& h, double p);

// p(1-p)/f^2 sum_u lambda_u [sum_k delta_k eta(u,k)]^2.
VarianceReport sigma2_ego(const PatternGraph& h, const Eigen::MatrixXd& pi,
                          const Eigen::VectorXd& lambda, double p);

VarianceReport sigma2(const PatternGraph& h, const Eigen::MatrixXd& pi,
                      const Eigen::VectorXd& lambda, double p, Scheme scheme);

// E[inclusion weight]: p^R (induced) or f(H,p) (ego).
double inclusion_probability(const PatternGraph& h, double p, Scheme scheme);

struct ThetaSet {
  double theta1 = 0.0;  // wedge density limit
  double theta2 = 0.0;  // triangle density limit
  Eigen::VectorXd theta3, theta4, theta5;  // per-class triangle/wedge terms
};

ThetaSet theta_set(const Eigen::MatrixXd& pi, const Eigen::VectorXd& lambda);

struct ClusteringAsymptotics {
  double tau2 = 0.0;
  double bias = 0.0;
  Scheme scheme = Scheme::kInduced;
};

// Error: DegenerateTheta.
ClusteringAsymptotics clustering_asymptotics(const Eigen::MatrixXd& pi,
                                             const Eigen::VectorXd& lambda,
                                             double p, Scheme scheme);

// Covariance of the scaled (estimated edge, wedge, triangle, population
// edge, wedge, triangle) counts; the population block is zero.
Eigen::MatrixXd joint_covariance(const Eigen::MatrixXd& pi,
                                 const Eigen::VectorXd& lambda, double p,
                                 Scheme scheme);

// Limit of the scaled (estimated wedge, estimated triangle) counts.
Eigen::Vector2d estimated_clustering_means(const ThetaSet& theta, double p,
                                           Scheme scheme);

struct ConditionalMoments {
  double mu = 0.0;
  double sigma2 = 0.0;
};

// Bias/variance constants of the design-ignored conditional edge-count limit
// (two alternating classes, a fraction a/2 of the vertices observed), as
// printed in the source derivation.
ConditionalMoments conditional_demo_constants(double a, double p,
                                              const Eigen::Matrix2d& pi);
// The same limits recomputed directly from the block sums.
ConditionalMoments conditional_demo_recomputed(double a, double p,
                                               const Eigen::Matrix2d& pi);

// N^{-R+1/2} (shat / f - s_pop) / sigma with f = p^R or f(H,p).
// Error: ZeroVariance.
double pivot(long long n, const PatternGraph& h, double shat, double s_pop,
             double sigma, double p, Scheme scheme);
double pivot_induced(long long n, const PatternGraph& h, double shat,
                     double s_pop, double sigma, double p);
double pivot_ego(long long n, const PatternGraph& h, double shat, double s_pop,
                 double sigma, double p);

}  // namespace netsamp

#endif  // NETSAMP_ASYMPTOTICS_HPP_
