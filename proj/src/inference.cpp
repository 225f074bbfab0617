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

#include "netsamp/inference.hpp"

#include <cmath>
#include <numbers>

#include "netsamp/asymptotics.hpp"
#include "netsamp/error.hpp"

namespace netsamp {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    Fail("OutOfDomain", ErrorKind::kUsage, "quantile level must lie in (0,1)");
  }
  // Acklam's rational approximation (relative error ~1.15e-9).
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00, 2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;
  double x;
  if (q < kLow) {
    const double t = std::sqrt(-2.0 * std::log(q));
    x = (((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
        ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0);
  } else if (q <= 1.0 - kLow) {
    const double s = q - 0.5, r = s * s;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * s /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double t = std::sqrt(-2.0 * std::log1p(-q));
    x = -(((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
        ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0);
  }
  // One Halley polish step against the erfc-based CDF.
  const double e = normal_cdf(x) - q;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

namespace {

void CheckLevel(double level) {
  if (!(level > 0.0 && level < 1.0)) {
    Fail("InvalidLevel", ErrorKind::kUsage, "level must lie in (0,1)");
  }
}

}  // namespace

PredictionInterval pi_subgraph(double shat, const PatternGraph& h, Scheme scheme,
                               const Eigen::MatrixXd& pi,
                               const Eigen::VectorXd& lambda, double p,
                               long long n, double level) {
  CheckLevel(level);
  const double sigma = std::sqrt(sigma2(h, pi, lambda, p, scheme).sigma2);
  if (!(sigma > 0.0)) {
    Fail("ZeroVariance", ErrorKind::kNumeric, "limiting variance is not positive");
  }
  const double eta = 1.0 - level;
  const double f = inclusion_probability(h, p, scheme);
  const double scale = sigma * std::pow(static_cast<double>(n), h.order() - 0.5);
  PredictionInterval out;
  out.target = Target::kCount;
  out.pattern = h.name();
  out.scheme = scheme;
  out.level = level;
  out.point = shat / f;
  out.lower = out.point - normal_quantile(1.0 - eta / 2.0) * scale;
  out.upper = out.point - normal_quantile(eta / 2.0) * scale;
  out.spread = sigma;
  const double max_count = std::pow(static_cast<double>(n), h.order());
  out.feasible = out.lower >= 0.0 && out.upper <= max_count;
  return out;
}

PredictionInterval to_density(const PredictionInterval& count_interval,
                              int order, long long n) {
  const double denom = std::pow(static_cast<double>(n), order);
  PredictionInterval out = count_interval;
  out.target = Target::kDensity;
  out.point /= denom;
  out.lower /= denom;
  out.upper /= denom;
  out.feasible = out.lower >= 0.0 && out.upper <= 1.0;
  return out;
}

PredictionInterval pi_clustering(double gamma_hat, Scheme scheme,
                                 const Eigen::MatrixXd& pi,
                                 const Eigen::VectorXd& lambda, double p,
                                 long long n, double level, bool correct_bias) {
  CheckLevel(level);
  const ClusteringAsymptotics asym = clustering_asymptotics(pi, lambda, p, scheme);
  const double tau = std::sqrt(asym.tau2);
  const double eta = 1.0 - level;
  const double half = tau / std::sqrt(static_cast<double>(n));
  PredictionInterval out;
  out.target = Target::kClustering;
  out.pattern = "clustering";
  out.scheme = scheme;
  out.level = level;
  out.bias = correct_bias ? asym.bias : 0.0;
  out.point = gamma_hat - out.bias;
  out.lower = out.point - normal_quantile(1.0 - eta / 2.0) * half;
  out.upper = out.point - normal_quantile(eta / 2.0) * half;
  out.spread = tau;
  out.feasible = out.lower >= 0.0 && out.upper <= 1.0;
  return out;
}

}  // namespace netsamp
