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

#include "netsamp/asymptotics.hpp"

#include <bit>
#include <cmath>

#include "netsamp/error.hpp"

namespace netsamp {
namespace {

void CheckP(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    Fail("InvalidProbability", ErrorKind::kUsage, "p must lie strictly in (0,1)");
  }
}

void CheckModel(const Eigen::MatrixXd& pi, const Eigen::VectorXd& lambda) {
  if (pi.rows() < 1 || pi.rows() != pi.cols() || lambda.size() != pi.rows()) {
    Fail("DimensionMismatch", ErrorKind::kUsage, "Pi must be K x K with |lambda| = K");
  }
}

double BitWeight(unsigned config, int r, double p) {
  const int ones = std::popcount(config);
  return std::pow(p, ones) * std::pow(1.0 - p, r - ones);
}

// Whether every listed edge has a selected endpoint under `config`.
bool EdgesCovered(const PatternGraph& h, const std::vector<int>& edge_ids,
                  unsigned config) {
  for (int e : edge_ids) {
    const auto& [i, j] = h.edges()[e];
    if (((config >> (i - 1)) & 1U) == 0 && ((config >> (j - 1)) & 1U) == 0) return false;
  }
  return true;
}

VarianceReport Finish(std::vector<double> components, double factor,
                      Scheme scheme, const PatternGraph& h) {
  VarianceReport report;
  report.scheme = scheme;
  report.pattern = h.name();
  double total = 0.0;
  for (double& c : components) {
    c *= factor;
    total += c;
  }
  report.sigma2 = total;
  report.components = std::move(components);
  return report;
}

}  // namespace

Eigen::MatrixXd eta_table(const PatternGraph& h, const Eigen::MatrixXd& pi,
                          const Eigen::VectorXd& lambda) {
  CheckModel(pi, lambda);
  const int k = static_cast<int>(pi.rows());
  const int r = h.order();
  long long tuples = 1;
  for (int t = 0; t < r; ++t) {
    tuples *= k;
    if (tuples > kMaxClassTuples) {
      Fail("ModelTooLarge", ErrorKind::kUsage, "K^R exceeds 6^8");
    }
  }
  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(k, r);
  std::vector<int> w(r, 0);  // 0-based classes, odometer order
  for (long long idx = 0; idx < tuples; ++idx) {
    double product = 1.0;
    for (const auto& [i, j] : h.edges()) product *= pi(w[i - 1], w[j - 1]);
    if (product != 0.0) {
      for (int pos = 0; pos < r; ++pos) {
        double weight = product;
        for (int q = 0; q < r; ++q)
          if (q != pos) weight *= lambda[w[q]];
        table(w[pos], pos) += weight;
      }
    }
    for (int q = r - 1; q >= 0; --q) {
      if (++w[q] < k) break;
      w[q] = 0;
    }
  }
  return table;
}

double eta(int u1, int k, const PatternGraph& h, const Eigen::MatrixXd& pi,
           const Eigen::VectorXd& lambda) {
  if (u1 < 1 || u1 > pi.rows() || k < 1 || k > h.order()) {
    Fail("IndexOutOfRange", ErrorKind::kUsage, "class or position out of range");
  }
  return eta_table(h, pi, lambda)(u1 - 1, k - 1);
}

VarianceReport sigma2_induced(const PatternGraph& h, const Eigen::MatrixXd& pi,
                              const Eigen::VectorXd& lambda, double p) {
  CheckP(p);
  const Eigen::MatrixXd table = eta_table(h, pi, lambda);
  std::vector<double> components(table.rows());
  for (int u = 0; u < table.rows(); ++u) {
    const double s = table.row(u).sum();
    components[u] = lambda[u] * s * s;
  }
  return Finish(std::move(components), 1.0 / p - 1.0, Scheme::kInduced, h);
}

EgoFunctionals ego_functionals(const PatternGraph& h, double p) {
  CheckP(p);
  const int r = h.order();
  EgoFunctionals out;
  out.delta.assign(r, 0.0);
  out.g1.assign(r, 0.0);
  out.g2.assign(r, 0.0);
  std::vector<int> all_edges(h.size());
  for (int e = 0; e < h.size(); ++e) all_edges[e] = e;
  for (unsigned config = 0; config < (1U << r); ++config) {
    const double weight = BitWeight(config, r, p);
    if (EdgesCovered(h, all_edges, config)) out.f += weight;
    for (int v = 1; v <= r; ++v) {
      if (!EdgesCovered(h, h.nonincident_edges(v), config)) continue;
      out.g2[v - 1] += weight;
      const std::uint32_t nbrs = h.neighbor_mask(v);
      if ((config & nbrs) == nbrs) out.g1[v - 1] += weight;
    }
  }
  for (int v = 0; v < r; ++v) out.delta[v] = out.g2[v] - out.g1[v];
  return out;
}

VarianceReport sigma2_ego(const PatternGraph& h, const Eigen::MatrixXd& pi,
                          const Eigen::VectorXd& lambda, double p) {
  const EgoFunctionals ego = ego_functionals(h, p);
  const Eigen::MatrixXd table = eta_table(h, pi, lambda);
  std::vector<double> components(table.rows());
  for (int u = 0; u < table.rows(); ++u) {
    double s = 0.0;
    for (int k = 0; k < h.order(); ++k) s += ego.delta[k] * table(u, k);
    components[u] = lambda[u] * s * s;
  }
  return Finish(std::move(components), p * (1.0 - p) / (ego.f * ego.f),
                Scheme::kEgo, h);
}

VarianceReport sigma2(const PatternGraph& h, const Eigen::MatrixXd& pi,
                      const Eigen::VectorXd& lambda, double p, Scheme scheme) {
  return scheme == Scheme::kInduced ? sigma2_induced(h, pi, lambda, p)
                                    : sigma2_ego(h, pi, lambda, p);
}

double inclusion_probability(const PatternGraph& h, double p, Scheme scheme) {
  CheckP(p);
  return scheme == Scheme::kInduced ? std::pow(p, h.order()) : ego_functionals(h, p).f;
}

ThetaSet theta_set(const Eigen::MatrixXd& pi, const Eigen::VectorXd& lambda) {
  CheckModel(pi, lambda);
  const int k = static_cast<int>(pi.rows());
  ThetaSet t;
  t.theta3 = Eigen::VectorXd::Zero(k);
  t.theta4 = Eigen::VectorXd::Zero(k);
  t.theta5 = Eigen::VectorXd::Zero(k);
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      for (int w = 0; w < k; ++w) {
        const double lvw = lambda[v] * lambda[w];
        t.theta3[u] += pi(u, v) * pi(v, w) * pi(w, u) * lvw;
        t.theta4[u] += pi(u, v) * pi(v, w) * lvw;
        t.theta5[u] += pi(v, u) * pi(u, w) * lvw;
      }
    }
    t.theta1 += lambda[u] * t.theta4[u];
    t.theta2 += lambda[u] * t.theta3[u];
  }
  return t;
}

ClusteringAsymptotics clustering_asymptotics(const Eigen::MatrixXd& pi,
                                             const Eigen::VectorXd& lambda,
                                             double p, Scheme scheme) {
  CheckP(p);
  const ThetaSet t = theta_set(pi, lambda);
  if (!(t.theta1 > 0.0)) {
    Fail("DegenerateTheta", ErrorKind::kNumeric, "wedge density limit is zero");
  }
  ClusteringAsymptotics out;
  out.scheme = scheme;
  const double th1 = t.theta1, th2 = t.theta2;
  double sum = 0.0;
  if (scheme == Scheme::kInduced) {
    for (int u = 0; u < lambda.size(); ++u) {
      const double term =
          3.0 * th1 * t.theta3[u] - th2 * (2.0 * t.theta4[u] + t.theta5[u]);
      sum += lambda[u] * term * term;
    }
    out.tau2 = (1.0 / p - 1.0) * sum / std::pow(th1, 4);
    out.bias = 0.0;
  } else {
    const double q = p * (1.0 - p) + 1.0;
    for (int u = 0; u < lambda.size(); ++u) {
      const double term =
          6.0 * th1 * t.theta3[u] -
          (3.0 - 2.0 * p) * th2 / q *
              (2.0 * p * t.theta4[u] + (1.0 + p) * t.theta5[u]);
      sum += lambda[u] * term * term;
    }
    out.tau2 = p * std::pow(1.0 - p, 3) / (q * q) * sum / std::pow(th1, 4);
    out.bias = -(1.0 - p) * (1.0 - p) / q * th2 / th1;
  }
  return out;
}

Eigen::MatrixXd joint_covariance(const Eigen::MatrixXd& pi,
                                 const Eigen::VectorXd& lambda, double p,
                                 Scheme scheme) {
  CheckP(p);
  const ThetaSet t = theta_set(pi, lambda);
  const Eigen::VectorXd row_mass = pi * lambda;
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(6, 6);
  for (int u = 0; u < lambda.size(); ++u) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(6);
    a[0] = 2.0 * row_mass[u];
    if (scheme == Scheme::kInduced) {
      a[1] = p * (t.theta5[u] + 2.0 * t.theta4[u]);
      a[2] = 3.0 * p * t.theta3[u];
    } else {
      a[1] = (1.0 + p) * t.theta5[u] + 2.0 * p * t.theta4[u];
      a[2] = 6.0 * p * t.theta3[u];
    }
    sigma += lambda[u] * a * a.transpose();
  }
  const double factor = scheme == Scheme::kInduced ? std::pow(p, 3) * (1.0 - p)
                                                   : p * std::pow(1.0 - p, 3);
  return factor * sigma;
}

Eigen::Vector2d estimated_clustering_means(const ThetaSet& theta, double p,
                                           Scheme scheme) {
  CheckP(p);
  double wedge_rate, triangle_rate;
  if (scheme == Scheme::kInduced) {
    wedge_rate = triangle_rate = std::pow(p, 3);
  } else {
    wedge_rate = p * p * (1.0 - p) + p;
    triangle_rate = 3.0 * p * p * (1.0 - p) + std::pow(p, 3);
  }
  return {wedge_rate * theta.theta1, triangle_rate * theta.theta2};
}

ConditionalMoments conditional_demo_constants(double a, double p,
                                              const Eigen::Matrix2d& pi) {
  const double b = 1.0 - a / 2.0;
  const double inv = 1.0 / (p * p) - 1.0;
  ConditionalMoments out;
  out.mu = (a * a / 4.0 * inv - a * b - b * b) * pi(0, 0) - pi(0, 1) -
           pi(1, 1) / 4.0;
  out.sigma2 = (a * a / 2.0 * inv * inv + 2.0 * a * b + 2.0 * b * b) *
                   pi(0, 0) * (1.0 - pi(0, 0)) +
               2.0 * pi(0, 1) * (1.0 - pi(0, 1)) +
               pi(1, 1) * (1.0 - pi(1, 1)) / 2.0;
  return out;
}

ConditionalMoments conditional_demo_recomputed(double a, double p,
                                               const Eigen::Matrix2d& pi) {
  // Observed class-1 share a/2, unobserved class-1 share (1-a)/2, class 2
  // share 1/2; weights 1/p^2 - 1 inside the observed block, -1 elsewhere.
  const double inv = 1.0 / (p * p) - 1.0;
  const double v11 = pi(0, 0) * (1.0 - pi(0, 0));
  const double v12 = pi(0, 1) * (1.0 - pi(0, 1));
  const double v22 = pi(1, 1) * (1.0 - pi(1, 1));
  ConditionalMoments out;
  out.mu = (a * a / 4.0 * inv - a * (1.0 - a) / 2.0 - (1.0 - a) * (1.0 - a) / 4.0) *
               pi(0, 0) -
           pi(0, 1) / 2.0 - pi(1, 1) / 4.0;
  out.sigma2 = (a * a / 2.0 * inv * inv + a * (1.0 - a) + (1.0 - a) * (1.0 - a) / 2.0) *
                   v11 +
               v12 + v22 / 2.0;
  return out;
}

double pivot(long long n, const PatternGraph& h, double shat, double s_pop,
             double sigma, double p, Scheme scheme) {
  if (!(sigma > 0.0)) Fail("ZeroVariance", ErrorKind::kNumeric, "sigma must be positive");
  const double f = inclusion_probability(h, p, scheme);
  const double scale = std::pow(static_cast<double>(n), -h.order() + 0.5);
  return scale * (shat / f - s_pop) / sigma;
}

double pivot_induced(long long n, const PatternGraph& h, double shat,
                     double s_pop, double sigma, double p) {
  return pivot(n, h, shat, s_pop, sigma, p, Scheme::kInduced);
}

double pivot_ego(long long n, const PatternGraph& h, double shat, double s_pop,
                 double sigma, double p) {
  return pivot(n, h, shat, s_pop, sigma, p, Scheme::kEgo);
}

}  // namespace netsamp
