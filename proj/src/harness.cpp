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

#include "netsamp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "netsamp/asymptotics.hpp"
#include "netsamp/counting.hpp"
#include "netsamp/error.hpp"
#include "netsamp/io.hpp"
#include "netsamp/population.hpp"
#include "netsamp/rng.hpp"
#include "netsamp/sparse.hpp"

namespace netsamp {

void ExperimentConfig::validate() const {
  auto usage = [](const std::string& msg) { Fail("UsageError", ErrorKind::kUsage, msg); };
  if (n < 3) usage("n must be >= 3");
  if (replicates < 1) usage("replicates must be >= 1");
  if (p_grid.empty()) usage("p grid is empty");
  for (double p : p_grid)
    if (!(p > 0.0 && p < 1.0)) usage("each p must lie strictly in (0,1)");
  if (!(level > 0.0 && level < 1.0)) usage("level must lie in (0,1)");
  if (schemes.empty() || scenarios.empty()) usage("no scheme or scenario selected");
  if (pi.rows() < 1 || pi.rows() != pi.cols() || lambda.size() != pi.rows()) {
    usage("model matrix must be K x K with K proportions");
  }
  if (!(beta >= 0.0 && beta < 1.0)) usage("beta must lie in [0,1)");
  if (threads < 0) usage("threads must be >= 0");
}

ExperimentConfig default_experiment() {
  ExperimentConfig config;
  config.pi = simulation_pi();
  config.lambda = Eigen::VectorXd::Constant(4, 0.25);
  return config;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

SbmModel TruthModel(const ExperimentConfig& config) {
  SbmModel model;
  if (config.beta > 0.0) {
    model = materialize_sparse({config.pi, config.lambda, config.beta}, config.n);
  } else {
    model.pi = config.pi;
    model.lambda = config.lambda;
  }
  model.labels = materialize_labels(config.lambda, config.n);
  model.validate();
  return model;
}

// Runs fn(m) for m = 0..count-1 on a worker pool. Results must be written to
// per-replicate slots so that the outcome is independent of thread count.
template <typename Fn>
void ForEachReplicate(int count, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::min(workers, count);
  std::atomic<int> next{0};
  std::mutex error_mutex;
  int error_index = count;
  std::exception_ptr error;
  auto work = [&] {
    for (int m = next++; m < count; m = next++) {
      try {
        fn(m);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (m < error_index) {
          error_index = m;
          error = std::current_exception();
        }
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

std::uint64_t MaskSeed(std::uint64_t replicate_seed, std::size_t p_index) {
  return Mix64(replicate_seed, kMaskDomain + p_index);
}

struct Outcome {
  bool ok = false;
  bool hit = false;
  double length = 0.0;
  double error = 0.0;
};

double Density(Count count, int order, int n) {
  return count_to_double(count) / std::pow(static_cast<double>(n), order);
}

Count PopulationCount(const PopulationGraph& g, const MotifCounts& fast,
                      const PatternGraph& h) {
  if (h.order() == 2) return fast.edge;
  if (h.order() == 3) return h.size() == 2 ? fast.wedge : fast.triangle;
  return count_population(g, h).value;
}

Count EstimatedCount(const SampleView& view, const MotifCounts& fast,
                     const PatternGraph& h) {
  if (h.order() == 2) return fast.edge;
  if (h.order() == 3) return h.size() == 2 ? fast.wedge : fast.triangle;
  return count_estimated(view, h).value;
}

}  // namespace

std::vector<CoverageRow> run_coverage(const ExperimentConfig& config) {
  config.validate();
  const SbmModel truth = TruthModel(config);
  std::vector<PatternGraph> motifs;
  for (const auto& m : config.motifs) motifs.push_back(parse_motif(m));
  std::vector<std::string> targets;
  for (const auto& h : motifs) targets.push_back(h.name());
  const int first_clustering = static_cast<int>(targets.size());
  if (config.clustering) {
    targets.push_back("clustering");
    if (config.uncorrected_clustering) targets.push_back("clustering_uncorrected");
  }
  const int n_p = static_cast<int>(config.p_grid.size());
  const int n_scheme = static_cast<int>(config.schemes.size());
  const int n_scen = static_cast<int>(config.scenarios.size());
  const int n_target = static_cast<int>(targets.size());
  const int cells = n_p * n_scheme * n_scen * n_target;
  auto cell = [&](int pi, int si, int ci, int ti) {
    return ((pi * n_scheme + si) * n_scen + ci) * n_target + ti;
  };
  std::vector<std::vector<Outcome>> outcomes(config.replicates);
  const int n = config.n;

  ForEachReplicate(config.replicates, config.threads, [&](int m) {
    std::vector<Outcome>& out = outcomes[m];
    out.assign(cells, Outcome{});
    const std::uint64_t seed_m = ReplicateSeed(config.seed, m);
    const PopulationGraph g = generate(truth, n, seed_m);
    const MotifCounts pop = population_motif_counts(g);
    std::vector<double> truth_density;
    for (const auto& h : motifs) truth_density.push_back(Density(PopulationCount(g, pop, h), h.order(), n));
    const double gamma = pop.clustering();
    for (int pi = 0; pi < n_p; ++pi) {
      const double p = config.p_grid[pi];
      const SampleMask mask = bernoulli_select(n, p, MaskSeed(seed_m, pi));
      for (int si = 0; si < n_scheme; ++si) {
        const SampleView view{&g, mask, config.schemes[si]};
        const MotifCounts est = estimated_motif_counts(view);
        std::vector<double> shat;
        for (const auto& h : motifs) shat.push_back(count_to_double(EstimatedCount(view, est, h)));
        const double gamma_hat = est.clustering();
        for (int ci = 0; ci < n_scen; ++ci) {
          EstimatedParams params;
          try {
            SpectralOptions options = config.spectral;
            options.seed = Mix64(seed_m, kClusterDomain + pi * 16 + si);
            params = estimate_params(view, config.scenarios[ci], truth, options);
          } catch (const Error&) {
            continue;  // recorded as failure for every target
          }
          if (params.any_missing) continue;
          for (int ti = 0; ti < n_target; ++ti) {
            Outcome& o = out[cell(pi, si, ci, ti)];
            try {
              PredictionInterval interval;
              double truth_value, raw;
              if (ti < first_clustering) {
                const PatternGraph& h = motifs[ti];
                interval = to_density(
                    pi_subgraph(shat[ti], h, view.scheme, params.pi_hat,
                                params.lambda_hat, p, n, config.level),
                    h.order(), n);
                truth_value = truth_density[ti];
                raw = interval.point;
              } else {
                const bool correct = targets[ti] == "clustering";
                interval = pi_clustering(gamma_hat, view.scheme, params.pi_hat,
                                         params.lambda_hat, p, n, config.level,
                                         correct);
                truth_value = gamma;
                raw = gamma_hat;
              }
              if (!std::isfinite(interval.lower) || !std::isfinite(interval.upper)) continue;
              o.ok = true;
              o.hit = interval.contains(truth_value);
              o.length = interval.length();
              o.error = raw - truth_value;
            } catch (const Error&) {
              o.ok = false;
            }
          }
        }
      }
    }
  });

  std::vector<CoverageRow> rows;
  for (int pi = 0; pi < n_p; ++pi) {
    for (int si = 0; si < n_scheme; ++si) {
      for (int ci = 0; ci < n_scen; ++ci) {
        for (int ti = 0; ti < n_target; ++ti) {
          if (targets[ti] == "clustering_uncorrected" && config.schemes[si] != Scheme::kEgo) continue;
          CoverageRow row;
          row.target = targets[ti];
          row.scheme = config.schemes[si];
          row.scenario = config.scenarios[ci];
          row.p = config.p_grid[pi];
          double hits = 0.0, length = 0.0, err = 0.0, err2 = 0.0;
          for (int m = 0; m < config.replicates; ++m) {
            const Outcome& o = outcomes[m][cell(pi, si, ci, ti)];
            if (!o.ok) {
              ++row.failures;
              continue;
            }
            ++row.replicates;
            hits += o.hit ? 1.0 : 0.0;
            length += o.length;
            err += o.error;
          }
          if (row.replicates > 0) {
            row.coverage = hits / row.replicates;
            row.avg_length = length / row.replicates;
            row.mean_error = err / row.replicates;
            for (int m = 0; m < config.replicates; ++m) {
              const Outcome& o = outcomes[m][cell(pi, si, ci, ti)];
              if (o.ok) err2 += (o.error - row.mean_error) * (o.error - row.mean_error);
            }
            row.sd_error = row.replicates > 1 ? std::sqrt(err2 / (row.replicates - 1)) : 0.0;
          }
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

std::vector<ArbRow> arb_bias(const ExperimentConfig& config) {
  config.validate();
  const SbmModel truth = TruthModel(config);
  const Eigen::VectorXd lambda_n = label_proportions(truth.labels, truth.classes());
  const int n_p = static_cast<int>(config.p_grid.size());
  const int n_scen = static_cast<int>(config.scenarios.size());
  std::vector<double> true_bias(n_p);
  for (int pi = 0; pi < n_p; ++pi) {
    true_bias[pi] = clustering_asymptotics(truth.pi, lambda_n, config.p_grid[pi], Scheme::kEgo).bias;
    if (true_bias[pi] == 0.0) Fail("ZeroTrueBias", ErrorKind::kNumeric, "true bias is zero");
  }
  // NaN marks a failed replicate.
  std::vector<std::vector<double>> rel(config.replicates);
  ForEachReplicate(config.replicates, config.threads, [&](int m) {
    rel[m].assign(n_p * n_scen, std::nan(""));
    const std::uint64_t seed_m = ReplicateSeed(config.seed, m);
    const PopulationGraph g = generate(truth, config.n, seed_m);
    for (int pi = 0; pi < n_p; ++pi) {
      const double p = config.p_grid[pi];
      const SampleView view{&g, bernoulli_select(config.n, p, MaskSeed(seed_m, pi)), Scheme::kEgo};
      for (int ci = 0; ci < n_scen; ++ci) {
        try {
          SpectralOptions options = config.spectral;
          options.seed = Mix64(seed_m, kClusterDomain + pi * 16 + 1);
          const EstimatedParams params = estimate_params(view, config.scenarios[ci], truth, options);
          if (params.any_missing) continue;
          const double b = clustering_asymptotics(params.pi_hat, params.lambda_hat, p, Scheme::kEgo).bias;
          rel[m][pi * n_scen + ci] = std::abs(b - true_bias[pi]) / std::abs(true_bias[pi]);
        } catch (const Error&) {
        }
      }
    }
  });
  std::vector<ArbRow> rows;
  for (int pi = 0; pi < n_p; ++pi) {
    for (int ci = 0; ci < n_scen; ++ci) {
      ArbRow row;
      row.scenario = config.scenarios[ci];
      row.p = config.p_grid[pi];
      row.true_bias = true_bias[pi];
      double total = 0.0;
      for (int m = 0; m < config.replicates; ++m) {
        const double v = rel[m][pi * n_scen + ci];
        if (std::isnan(v)) {
          ++row.failures;
        } else {
          ++row.replicates;
          total += v;
        }
      }
      row.arb_percent = row.replicates > 0 ? 100.0 * total / row.replicates : std::nan("");
      rows.push_back(row);
    }
  }
  return rows;
}

double ks_distance_normal(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = normal_cdf(values[i]);
    d = std::max({d, (i + 1) / m - f, f - i / m});
  }
  return d;
}

std::vector<PivotSummary> run_sparse_clt(const ExperimentConfig& config) {
  config.validate();
  const SbmModel truth = TruthModel(config);
  const double p = config.p_grid.front();
  std::vector<PatternGraph> motifs;
  std::vector<double> taus, exponents;
  std::vector<PivotSummary> out;
  for (const auto& m : config.motifs) {
    motifs.push_back(parse_motif(m));
    const SparseVariance sv = sparse_variance(motifs.back(), config.pi, config.lambda, p, config.beta);
    if (!(sv.report.sigma2 > 0.0)) Fail("ZeroVariance", ErrorKind::kNumeric, "sparse variance is zero");
    taus.push_back(std::sqrt(sv.report.sigma2));
    exponents.push_back(sv.scale_exponent);
    PivotSummary s;
    s.motif = motifs.back().name();
    s.beta = config.beta;
    s.admissible = sv.admissible;
    s.pivots.assign(config.replicates, 0.0);
    out.push_back(std::move(s));
  }
  ForEachReplicate(config.replicates, config.threads, [&](int m) {
    const std::uint64_t seed_m = ReplicateSeed(config.seed, m);
    const PopulationGraph g = generate(truth, config.n, seed_m);
    const SampleView view{&g, bernoulli_select(config.n, p, MaskSeed(seed_m, 0)), Scheme::kInduced};
    const MotifCounts pop = population_motif_counts(g);
    const MotifCounts est = estimated_motif_counts(view);
    for (std::size_t k = 0; k < motifs.size(); ++k) {
      const PatternGraph& h = motifs[k];
      const double s = count_to_double(PopulationCount(g, pop, h));
      const double shat = count_to_double(EstimatedCount(view, est, h));
      const double scale = std::pow(static_cast<double>(config.n), exponents[k]);
      out[k].pivots[m] = scale * (shat / std::pow(p, h.order()) - s) / taus[k];
    }
  });
  for (auto& s : out) {
    double mean = 0.0;
    for (double v : s.pivots) mean += v;
    mean /= config.replicates;
    double var = 0.0;
    for (double v : s.pivots) var += (v - mean) * (v - mean);
    s.mean = mean;
    s.variance = config.replicates > 1 ? var / (config.replicates - 1) : 0.0;
    s.ks_distance = ks_distance_normal(s.pivots);
    for (int b = 0; b <= 16; ++b) s.bin_edges.push_back(-4.0 + 0.5 * b);
    s.bin_counts.assign(16, 0);
    for (double v : s.pivots) {
      const int b = std::clamp(static_cast<int>(std::floor((v + 4.0) / 0.5)), 0, 15);
      ++s.bin_counts[b];
    }
  }
  return out;
}

AnalysisReport analyze_graph(const PopulationGraph& graph, double p, Scheme scheme,
                             double level, std::uint64_t seed) {
  if (graph.labels().empty()) Fail("LabelMismatch", ErrorKind::kData, "graph has no labels");
  const int n = graph.n();
  const int k = *std::max_element(graph.labels().begin(), graph.labels().end());
  AnalysisReport report;
  report.n = n;
  SampleMask full = mask_from_indicators(std::vector<int>(n, 1), 1.0);
  report.pi = naive_mle_pi(SampleView{&graph, full, Scheme::kInduced}, graph.labels(), k).pi;
  report.lambda = label_proportions(graph.labels(), k);
  const SampleView view{&graph, bernoulli_select(n, p, seed), scheme};
  report.selected = view.mask.count();
  const MotifCounts pop = population_motif_counts(graph);
  const MotifCounts est = estimated_motif_counts(view);
  const PatternGraph motifs[] = {canonical(MotifKind::kEdge), canonical(MotifKind::kWedge),
                                 canonical(MotifKind::kTriangle)};
  const Count pop_counts[] = {pop.edge, pop.wedge, pop.triangle};
  const Count est_counts[] = {est.edge, est.wedge, est.triangle};
  for (int t = 0; t < 3; ++t) {
    AnalysisRow row;
    row.target = motifs[t].name() + "_density";
    row.true_value = Density(pop_counts[t], motifs[t].order(), n);
    row.interval = to_density(pi_subgraph(count_to_double(est_counts[t]), motifs[t], scheme,
                                          report.pi, report.lambda, p, n, level),
                              motifs[t].order(), n);
    report.rows.push_back(row);
  }
  AnalysisRow cc;
  cc.target = "clustering";
  cc.true_value = pop.clustering();
  cc.interval = pi_clustering(est.clustering(), scheme, report.pi, report.lambda, p, n, level);
  report.rows.push_back(cc);
  return report;
}

AnalysisReport analyze_real(const std::string& edge_path, const std::string& label_path,
                            double p, Scheme scheme, double level, std::uint64_t seed) {
  LoadedGraph loaded = load_graph(edge_path, label_path, true);
  AnalysisReport report = analyze_graph(loaded.graph, p, scheme, level, seed);
  report.dropped_isolated = loaded.dropped_isolated;
  return report;
}

void write_config_echo(const ExperimentConfig& config, std::ostream& out) {
  auto list = [](const auto& items, auto fmt) {
    std::string s;
    for (const auto& it : items) s += (s.empty() ? "" : ",") + fmt(it);
    return s;
  };
  out << "# n=" << config.n << '\n';
  out << "# p=" << list(config.p_grid, format_number) << '\n';
  out << "# reps=" << config.replicates << '\n';
  out << "# scheme=" << list(config.schemes, [](Scheme s) { return to_string(s); }) << '\n';
  out << "# scenario=" << list(config.scenarios, [](Scenario s) { return to_string(s); }) << '\n';
  out << "# level=" << format_number(config.level) << '\n';
  out << "# beta=" << format_number(config.beta) << '\n';
  out << "# seed=" << config.seed << '\n';
  out << "# motifs=" << list(config.motifs, [](const std::string& s) { return s; }) << '\n';
  std::string matrix;
  for (int r = 0; r < config.pi.rows(); ++r) {
    if (r > 0) matrix += ';';
    for (int c = 0; c < config.pi.cols(); ++c) {
      matrix += (c > 0 ? "," : "") + format_number(config.pi(r, c));
    }
  }
  out << "# " << (config.beta > 0.0 ? "c=" : "pi=") << matrix << '\n';
  std::string lam;
  for (int r = 0; r < config.lambda.size(); ++r) lam += (r > 0 ? "," : "") + format_number(config.lambda[r]);
  out << "# lambda=" << lam << '\n';
}

void write_coverage_csv(const ExperimentConfig& config, const std::vector<CoverageRow>& rows,
                        std::ostream& out) {
  write_config_echo(config, out);
  out << "target,scheme,scenario,p,coverage,avg_length,replicates,failures,mean_error,sd_error\n";
  for (const auto& r : rows) {
    out << r.target << ',' << to_string(r.scheme) << ',' << to_string(r.scenario) << ','
        << format_number(r.p) << ',' << format_number(r.coverage) << ','
        << format_number(r.avg_length) << ',' << r.replicates << ',' << r.failures << ','
        << format_number(r.mean_error) << ',' << format_number(r.sd_error) << '\n';
  }
}

void write_arb_csv(const ExperimentConfig& config, const std::vector<ArbRow>& rows,
                   std::ostream& out) {
  write_config_echo(config, out);
  out << "scenario,p,true_bias,arb_percent,replicates,failures\n";
  for (const auto& r : rows) {
    out << to_string(r.scenario) << ',' << format_number(r.p) << ','
        << format_number(r.true_bias) << ',' << format_number(r.arb_percent) << ','
        << r.replicates << ',' << r.failures << '\n';
  }
}

void write_pivot_csv(const ExperimentConfig& config, const std::vector<PivotSummary>& rows,
                     std::ostream& out) {
  write_config_echo(config, out);
  out << "motif,beta,admissible,mean,variance,ks_distance,bin_lower,bin_upper,count\n";
  for (const auto& r : rows) {
    for (std::size_t b = 0; b < r.bin_counts.size(); ++b) {
      out << r.motif << ',' << format_number(r.beta) << ',' << (r.admissible ? 1 : 0) << ','
          << format_number(r.mean) << ',' << format_number(r.variance) << ','
          << format_number(r.ks_distance) << ',' << format_number(r.bin_edges[b]) << ','
          << format_number(r.bin_edges[b + 1]) << ',' << r.bin_counts[b] << '\n';
    }
  }
}

}  // namespace netsamp
