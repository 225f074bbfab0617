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

#include "netsamp/estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "netsamp/error.hpp"
#include "netsamp/rng.hpp"

namespace netsamp {

std::string to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kC1: return "c1";
    case Scenario::kC2: return "c2";
    case Scenario::kC3: return "c3";
    case Scenario::kC4: return "c4";
  }
  return "c1";
}

Scenario parse_scenario(const std::string& text) {
  if (text == "c1") return Scenario::kC1;
  if (text == "c2") return Scenario::kC2;
  if (text == "c3") return Scenario::kC3;
  if (text == "c4") return Scenario::kC4;
  Fail("UsageError", ErrorKind::kUsage, "scenario must be c1, c2, c3 or c4");
}

PiEstimate naive_mle_pi(const SampleView& view, const std::vector<int>& labels,
                        int k) {
  const PopulationGraph& g = *view.population;
  const int n = g.n(), words = g.words();
  if (static_cast<int>(labels.size()) != n || k < 1) {
    Fail("DimensionMismatch", ErrorKind::kUsage, "labels must have length N");
  }
  std::vector<std::vector<Word>> class_bits(k, std::vector<Word>(words, 0));
  for (int i = 0; i < n; ++i) {
    if (labels[i] < 0 || labels[i] > k) {
      Fail("DimensionMismatch", ErrorKind::kData, "label outside 0..K");
    }
    if (labels[i] > 0) class_bits[labels[i] - 1][i >> 6] |= Word{1} << (i & 63);
  }
  PiEstimate out;
  out.pairs = Eigen::MatrixXd::Zero(k, k);
  out.edges = Eigen::MatrixXd::Zero(k, k);
  const Word* mask = view.mask.bits.data();
  std::vector<Word> partner(words);
  for (int i = 0; i < n; ++i) {
    if (!view.mask.selected(i) || labels[i] == 0) continue;
    // Partners j > i always; for ego also unselected j < i (pairs with two
    // selected endpoints are visited once, from the smaller index).
    for (int w = 0; w < words; ++w) {
      Word above = 0;
      if (w > (i >> 6)) {
        above = ~Word{0};
      } else if (w == (i >> 6)) {
        above = (i & 63) == 63 ? 0 : (~Word{0} << ((i & 63) + 1));
      }
      partner[w] = view.scheme == Scheme::kInduced ? (above & mask[w])
                                                   : (above | ~mask[w]);
    }
    const int a = labels[i] - 1;
    const Word* row = g.row(i);
    for (int b = 0; b < k; ++b) {
      int pairs = 0, edges = 0;
      for (int w = 0; w < words; ++w) {
        const Word cand = partner[w] & class_bits[b][w];
        pairs += std::popcount(cand);
        edges += std::popcount(cand & row[w]);
      }
      const int lo = std::min(a, b), hi = std::max(a, b);
      out.pairs(lo, hi) += pairs;
      out.edges(lo, hi) += edges;
    }
  }
  out.pi = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      out.pairs(b, a) = out.pairs(a, b);
      out.edges(b, a) = out.edges(a, b);
      const double v = out.pairs(a, b) > 0
                           ? out.edges(a, b) / out.pairs(a, b)
                           : std::numeric_limits<double>::quiet_NaN();
      if (out.pairs(a, b) == 0) out.any_missing = true;
      out.pi(a, b) = out.pi(b, a) = v;
    }
  }
  return out;
}

namespace {

Eigen::MatrixXd InducedAdjacency(const SampleView& view,
                                 const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (view.population->edge(vertices[x], vertices[y])) a(x, y) = a(y, x) = 1.0;
  return a;
}

// Eigenpairs sorted by descending eigenvalue; each eigenvector's first
// coordinate above 1e-12 in magnitude is made positive.
void SortedEigen(const Eigen::MatrixXd& m, Eigen::VectorXd& values,
                 Eigen::MatrixXd* vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, vectors != nullptr ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  const int n = static_cast<int>(m.rows());
  values = solver.eigenvalues().reverse();
  if (vectors == nullptr) return;
  *vectors = solver.eigenvectors().rowwise().reverse();
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double v = (*vectors)(r, c);
      if (std::abs(v) > 1e-12) {
        if (v < 0) vectors->col(c) *= -1.0;
        break;
      }
    }
  }
}

struct Clustering {
  std::vector<int> assignment;
  double inertia = std::numeric_limits<double>::infinity();
};

Clustering Lloyd(const Eigen::MatrixXd& x, int k, SplitMix64& rng,
                 const SpectralOptions& options) {
  const int n = static_cast<int>(x.rows());
  // k-means++ seeding.
  Eigen::MatrixXd centers(k, x.cols());
  Eigen::VectorXd dist2 = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  int first = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  centers.row(0) = x.row(first);
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      dist2[i] = std::min(dist2[i], (x.row(i) - centers.row(c - 1)).squaredNorm());
      total += dist2[i];
    }
    int pick = n - 1;
    if (total > 0.0) {
      double target = rng.Uniform() * total;
      for (int i = 0; i < n; ++i) {
        target -= dist2[i];
        if (target < 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    }
    centers.row(c) = x.row(pick);
  }
  Clustering out;
  out.assignment.assign(n, 0);
  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double inertia = 0.0;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = (x.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      out.assignment[i] = best;
      inertia += best_d;
    }
    out.inertia = inertia;
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, x.cols());
    std::vector<int> sizes(k, 0);
    for (int i = 0; i < n; ++i) {
      sums.row(out.assignment[i]) += x.row(i);
      ++sizes[out.assignment[i]];
    }
    for (int c = 0; c < k; ++c)
      if (sizes[c] > 0) centers.row(c) = sums.row(c) / sizes[c];
    if (std::isfinite(previous) &&
        previous - inertia <= options.tolerance * std::max(previous, 1e-300)) {
      break;
    }
    previous = inertia;
  }
  return out;
}

}  // namespace

std::vector<int> spectral_labels(const SampleView& view, int k,
                                 const SpectralOptions& options) {
  if (k < 2) Fail("InvalidK", ErrorKind::kUsage, "spectral labelling needs K >= 2");
  const std::vector<int> vertices = view.mask.selected_vertices();
  const int n = static_cast<int>(vertices.size());
  if (n < k + 1) {
    Fail("TooFewSelectedNodes", ErrorKind::kData,
         std::to_string(n) + " selected vertices for K = " + std::to_string(k));
  }
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  // Regularised adjacency A + (mean degree / n) J keeps the leading
  // eigenvector strictly positive, also on disconnected samples.
  Eigen::MatrixXd a = InducedAdjacency(view, vertices);
  a.array() += a.sum() / (static_cast<double>(n) * n);
  SortedEigen(a, values, &vectors);
  // Entry-wise ratios to the leading eigenvector, truncated at log(n).
  const double cap = std::log(static_cast<double>(n));
  Eigen::MatrixXd ratios(n, k - 1);
  for (int i = 0; i < n; ++i) {
    const double lead = vectors(i, 0);
    for (int c = 1; c < k; ++c) {
      double r = std::abs(lead) > 1e-12 ? vectors(i, c) / lead : 0.0;
      ratios(i, c - 1) = std::clamp(r, -cap, cap);
    }
  }
  SplitMix64 rng(Mix64(options.seed, kClusterDomain));
  Clustering best;
  const int restarts = std::clamp(options.restarts, 1, 100);
  for (int r = 0; r < restarts; ++r) {
    Clustering run = Lloyd(ratios, k, rng, options);
    if (run.inertia < best.inertia) best = std::move(run);
  }
  // Canonical class ids: order of first appearance.
  std::vector<int> relabel(k, 0);
  int next = 0;
  std::vector<int> labels(view.population->n(), 0);
  for (int i = 0; i < n; ++i) {
    int& id = relabel[best.assignment[i]];
    if (id == 0) id = ++next;
    labels[vertices[i]] = id;
  }
  return labels;
}

int estimate_K(const SampleView& view) {
  const std::vector<int> vertices = view.mask.selected_vertices();
  const int n = static_cast<int>(vertices.size());
  if (n == 0) Fail("EmptyObservation", ErrorKind::kData, "no selected vertices");
  if (n == 1) return 1;
  const Eigen::MatrixXd a = InducedAdjacency(view, vertices);
  const Eigen::VectorXd degree = a.rowwise().sum();
  const double mean_degree = degree.mean();
  if (mean_degree <= 1.0) return 1;
  // Bethe Hessian H(r) = (r^2 - 1) I - r A + D at r = sqrt(mean degree):
  // each informative community direction contributes one negative eigenvalue.
  const double r = std::sqrt(mean_degree);
  Eigen::MatrixXd bethe = -r * a;
  bethe.diagonal() += degree + Eigen::VectorXd::Constant(n, r * r - 1.0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(bethe, Eigen::EigenvaluesOnly);
  const int negative = static_cast<int>((solver.eigenvalues().array() < 0.0).count());
  const int cap = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  return std::clamp(negative, 1, cap);
}

Eigen::VectorXd lambda_hat(const std::vector<int>& labels, int k) {
  Eigen::VectorXd freq = Eigen::VectorXd::Zero(k);
  double total = 0.0;
  for (int c : labels) {
    if (c == 0) continue;
    if (c < 0 || c > k) Fail("DimensionMismatch", ErrorKind::kData, "label outside 1..K");
    freq[c - 1] += 1.0;
    total += 1.0;
  }
  if (total == 0.0) Fail("NoLabels", ErrorKind::kData, "no labelled vertices");
  return freq / total;
}

EstimatedParams estimate_params(const SampleView& view, Scenario scenario,
                                const SbmModel& truth,
                                const SpectralOptions& options) {
  const int n = view.population->n();
  EstimatedParams out;
  out.scenario = scenario;
  const int k_true = truth.classes();
  switch (scenario) {
    case Scenario::kC1:
    case Scenario::kC2: {
      out.labels_hat = model_labels(truth, n);
      out.k_hat = k_true;
      out.lambda_hat = label_proportions(out.labels_hat, k_true);
      if (scenario == Scenario::kC1) {
        out.pi_hat = truth.pi;
      } else {
        PiEstimate est = naive_mle_pi(view, out.labels_hat, k_true);
        out.pi_hat = est.pi;
        out.any_missing = est.any_missing;
      }
      return out;
    }
    case Scenario::kC3:
    case Scenario::kC4: {
      out.k_hat = scenario == Scenario::kC3 ? k_true : estimate_K(view);
      if (out.k_hat == 1) {
        out.labels_hat.assign(n, 0);
        for (int v : view.mask.selected_vertices()) out.labels_hat[v] = 1;
      } else {
        out.labels_hat = spectral_labels(view, out.k_hat, options);
      }
      out.lambda_hat = lambda_hat(out.labels_hat, out.k_hat);
      PiEstimate est = naive_mle_pi(view, out.labels_hat, out.k_hat);
      out.pi_hat = est.pi;
      out.any_missing = est.any_missing;
      return out;
    }
  }
  return out;
}

double best_permutation_agreement(const std::vector<int>& truth,
                                  const std::vector<int>& estimate) {
  int k = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    k = std::max({k, truth[i], estimate[i]});
  }
  if (k > 8) Fail("InvalidK", ErrorKind::kUsage, "permutation search limited to K <= 8");
  Eigen::MatrixXd confusion = Eigen::MatrixXd::Zero(k, k);
  double labelled = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (estimate[i] == 0 || truth[i] == 0) continue;
    confusion(truth[i] - 1, estimate[i] - 1) += 1.0;
    labelled += 1.0;
  }
  if (labelled == 0.0) return 0.0;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double agree = 0.0;
    for (int c = 0; c < k; ++c) agree += confusion(c, perm[c]);
    best = std::max(best, agree);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / labelled;
}

}  // namespace netsamp
