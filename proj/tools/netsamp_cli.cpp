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


// netsamp command-line tool. Exit codes: 0 success, 2 usage error, 3 data
// error, 4 numeric degeneracy.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netsamp/asymptotics.hpp"
#include "netsamp/counting.hpp"
#include "netsamp/error.hpp"
#include "netsamp/estimation.hpp"
#include "netsamp/harness.hpp"
#include "netsamp/inference.hpp"
#include "netsamp/io.hpp"
#include "netsamp/pattern.hpp"
#include "netsamp/population.hpp"
#include "netsamp/sampling.hpp"
#include "netsamp/sparse.hpp"

namespace {

using namespace netsamp;

// Flags shared by every subcommand. Unset flags fall back to the config
// file, then to the built-in defaults.
struct Options {
  std::optional<int> n;
  std::vector<double> p;
  std::optional<double> beta;
  std::vector<std::string> scheme;
  std::vector<std::string> scenario;
  std::vector<std::string> motif;
  std::optional<double> level;
  std::optional<int> reps;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string out;
  std::string format = "csv";
  std::string config;
  std::string graph;
  std::string labels;
  std::string mask;
  bool uncorrected = false;
};

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Population size");
  cmd->add_option("--p", o.p, "Sampling probability (repeatable or comma list)")->delimiter(',');
  cmd->add_option("--beta", o.beta, "Sparsity exponent");
  cmd->add_option("--scheme", o.scheme, "induced, ego (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember({"induced", "ego"}));
  cmd->add_option("--scenario", o.scenario, "c1..c4 (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4"}));
  cmd->add_option("--motif", o.motif,
                  "edge, wedge, triangle, complete:R, star:R, line:R, circle:R, file:PATH");
  cmd->add_option("--level", o.level, "Prediction level");
  cmd->add_option("--reps", o.reps, "Monte-Carlo replicates");
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_option("--format", o.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
  cmd->add_option("--config", o.config, "key=value config file");
}

void AddGraphInput(CLI::App* cmd, Options& o, bool labels_required) {
  cmd->add_option("--graph", o.graph, "Edge-list file (.gz accepted)")->required();
  auto* labels = cmd->add_option("--labels", o.labels, "Vertex label file");
  if (labels_required) labels->required();
}

Config LoadConfig(const Options& o) {
  return o.config.empty() ? Config{} : parse_config(read_text_file(o.config));
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T ParseValue(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    Fail("UsageError", ErrorKind::kUsage, "bad value for '" + key + "': " + text);
  }
  return value;
}

bool ParseBool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "no") return false;
  Fail("UsageError", ErrorKind::kUsage, "bad boolean for '" + key + "': " + text);
}

// Merges config-file values and flags into an experiment configuration.
// Matrix keys: "pi" (dense) or "c" (sparse scale), rows separated by ';'.
ExperimentConfig BuildExperiment(const Options& o) {
  static const char* kKnown[] = {"n", "p", "reps", "seed", "scheme", "scenario", "level",
                                 "pi", "c", "lambda", "beta", "motifs", "threads",
                                 "clustering", "uncorrected_clustering"};
  ExperimentConfig c = default_experiment();
  const Config file = LoadConfig(o);
  for (const auto& [key, value] : file) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      Fail("UsageError", ErrorKind::kUsage, "unknown config key '" + key + "'");
    }
  }
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = file.find(key);
    return it == file.end() ? nullptr : &it->second;
  };
  if (auto* v = get("n")) c.n = ParseValue<int>("n", *v);
  if (auto* v = get("p")) c.p_grid = parse_list(*v);
  if (auto* v = get("reps")) c.replicates = ParseValue<int>("reps", *v);
  if (auto* v = get("seed")) c.seed = ParseValue<std::uint64_t>("seed", *v);
  if (auto* v = get("level")) c.level = ParseValue<double>("level", *v);
  if (auto* v = get("beta")) c.beta = ParseValue<double>("beta", *v);
  if (auto* v = get("threads")) c.threads = ParseValue<int>("threads", *v);
  if (auto* v = get("clustering")) c.clustering = ParseBool("clustering", *v);
  if (auto* v = get("uncorrected_clustering")) {
    c.uncorrected_clustering = ParseBool("uncorrected_clustering", *v);
  }
  if (auto* v = get("motifs")) c.motifs = SplitList(*v);
  if (auto* v = get("scheme")) {
    c.schemes.clear();
    for (const auto& s : SplitList(*v)) c.schemes.push_back(parse_scheme(s));
  }
  if (auto* v = get("scenario")) {
    c.scenarios.clear();
    for (const auto& s : SplitList(*v)) c.scenarios.push_back(parse_scenario(s));
  }
  const std::string* matrix = get("pi") ? get("pi") : get("c");
  if (matrix != nullptr) {
    c.pi = parse_matrix(*matrix);
    const Eigen::Index k = c.pi.rows();
    c.lambda = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  }
  if (auto* v = get("lambda")) {
    const std::vector<double> l = parse_list(*v);
    c.lambda = Eigen::Map<const Eigen::VectorXd>(l.data(), static_cast<Eigen::Index>(l.size()));
  }

  if (o.n) c.n = *o.n;
  if (!o.p.empty()) c.p_grid = o.p;
  if (o.reps) c.replicates = *o.reps;
  if (o.seed) c.seed = *o.seed;
  if (o.level) c.level = *o.level;
  if (o.beta) c.beta = *o.beta;
  if (o.threads) c.threads = *o.threads;
  if (!o.motif.empty()) c.motifs = o.motif;
  if (o.uncorrected) c.uncorrected_clustering = true;
  if (!o.scheme.empty()) {
    c.schemes.clear();
    for (const auto& s : o.scheme) c.schemes.push_back(parse_scheme(s));
  }
  if (!o.scenario.empty()) {
    c.scenarios.clear();
    for (const auto& s : o.scenario) c.scenarios.push_back(parse_scenario(s));
  }
  // Sparse runs default to the sparse simulation scale matrix.
  if (matrix == nullptr && c.beta > 0.0) {
    c.pi = sparse_simulation_c();
    if (get("lambda") == nullptr) {
      c.lambda = Eigen::VectorXd::Constant(c.pi.rows(), 1.0 / static_cast<double>(c.pi.rows()));
    }
  }
  c.validate();
  return c;
}

double SingleP(const ExperimentConfig& c) {
  if (c.p_grid.size() != 1) Fail("UsageError", ErrorKind::kUsage, "exactly one --p is required");
  return c.p_grid.front();
}

Scheme SingleScheme(const Options& o, Scheme fallback) {
  if (o.scheme.empty()) return fallback;
  if (o.scheme.size() != 1) Fail("UsageError", ErrorKind::kUsage, "exactly one --scheme is required");
  return parse_scheme(o.scheme.front());
}

// Renders CSV (with optional "# " comment lines) as an aligned plain-text
// table; comments are kept verbatim above the table.
std::string CsvToTable(const std::string& csv) {
  std::vector<std::string> comments;
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream out;
  for (const auto& c : comments) out << c << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

void Emit(const Options& o, const std::string& csv) {
  const std::string text = o.format == "table" ? CsvToTable(csv) : csv;
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) Fail("IoError", ErrorKind::kData, "cannot write " + o.out);
  file << text;
}

std::string Num(double v) { return format_number(v); }

LoadedGraph LoadInput(const Options& o) { return load_graph(o.graph, o.labels, false); }

// True block parameters of a labelled graph: class-pair edge densities and
// class proportions.
SbmModel BlockTruth(const PopulationGraph& g) {
  if (g.labels().empty()) Fail("LabelMismatch", ErrorKind::kData, "graph has no labels");
  const int k = *std::max_element(g.labels().begin(), g.labels().end());
  const SampleMask full = mask_from_indicators(std::vector<int>(g.n(), 1), 1.0);
  SbmModel truth;
  truth.pi = naive_mle_pi(SampleView{&g, full, Scheme::kInduced}, g.labels(), k).pi;
  truth.labels = g.labels();
  truth.lambda = label_proportions(g.labels(), k);
  return truth;
}

// ------------------------------------------------------------ subcommands

int RunGenerate(const Options& o) {
  const ExperimentConfig c = BuildExperiment(o);
  SbmModel model;
  if (c.beta > 0.0) {
    model = materialize_sparse(SparseSbmSpec{c.pi, c.lambda, c.beta}, c.n);
  } else {
    model.pi = c.pi;
    model.lambda = c.lambda;
  }
  model.labels = model_labels(model, c.n);
  const PopulationGraph g = generate(model, c.n, c.seed);
  if (o.out.empty()) {
    write_edge_list(g, std::cout);
    return 0;
  }
  std::ofstream edges(o.out + ".edges"), labels(o.out + ".labels");
  if (!edges || !labels) Fail("IoError", ErrorKind::kData, "cannot write " + o.out + ".*");
  write_edge_list(g, edges);
  write_labels(g.labels(), labels);
  std::cerr << "wrote " << o.out << ".edges (" << g.edge_count() << " edges) and " << o.out
            << ".labels\n";
  return 0;
}

int RunSample(const Options& o) {
  const ExperimentConfig c = BuildExperiment(o);
  int n = c.n;
  if (!o.graph.empty()) n = LoadInput(o).graph.n();
  const SampleMask mask = bernoulli_select(n, SingleP(c), c.seed);
  if (o.out.empty()) {
    write_mask(mask, std::cout);
  } else {
    std::ofstream file(o.out);
    if (!file) Fail("IoError", ErrorKind::kData, "cannot write " + o.out);
    write_mask(mask, file);
  }
  std::cerr << "selected " << mask.count() << " of " << n << " vertices\n";
  return 0;
}

int RunCount(const Options& o) {
  const LoadedGraph loaded = LoadInput(o);
  const PopulationGraph& g = loaded.graph;
  const std::vector<std::string> motifs =
      o.motif.empty() ? std::vector<std::string>{"edge", "wedge", "triangle"} : o.motif;
  std::optional<SampleView> view;
  double p = 0.0;
  if (!o.mask.empty()) {
    if (o.p.size() != 1) Fail("UsageError", ErrorKind::kUsage, "--mask needs exactly one --p");
    p = o.p.front();
    view = SampleView{&g, read_mask(o.mask, g.n(), p), SingleScheme(o, Scheme::kInduced)};
  }
  std::ostringstream csv;
  csv << "# n=" << g.n() << '\n';
  csv << "motif,order,count,density";
  if (view) csv << ",scheme,estimated_count,estimate";
  csv << '\n';
  for (const std::string& spec : motifs) {
    const PatternGraph h = parse_motif(spec);
    const Count s = count_population(g, h).value;
    const double scale = std::pow(static_cast<double>(g.n()), h.order());
    csv << h.name() << ',' << h.order() << ',' << count_to_string(s) << ','
        << Num(count_to_double(s) / scale);
    if (view) {
      const Count e = count_estimated(*view, h).value;
      const double f = view->scheme == Scheme::kInduced ? std::pow(p, h.order()) : ego_functionals(h, p).f;
      csv << ',' << to_string(view->scheme) << ',' << count_to_string(e) << ','
          << Num(count_to_double(e) / f / scale);
    }
    csv << '\n';
  }
  Emit(o, csv.str());
  return 0;
}

int RunVariance(const Options& o) {
  const ExperimentConfig c = BuildExperiment(o);
  const double p = SingleP(c);
  const std::vector<std::string> motifs = o.motif.empty() ? c.motifs : o.motif;
  std::ostringstream csv;
  csv << "quantity,scheme,value\n";
  for (const std::string& spec : motifs) {
    const PatternGraph h = parse_motif(spec);
    const EgoFunctionals ego = ego_functionals(h, p);
    csv << h.name() << ":f,ego," << Num(ego.f) << '\n';
    for (std::size_t r = 0; r < ego.delta.size(); ++r) {
      csv << h.name() << ":delta" << r + 1 << ",ego," << Num(ego.delta[r]) << '\n';
    }
    for (Scheme s : c.schemes) {
      csv << h.name() << ":sigma2," << to_string(s) << ',' << Num(sigma2(h, c.pi, c.lambda, p, s).sigma2)
          << '\n';
    }
  }
  if (c.clustering) {
    const ThetaSet t = theta_set(c.pi, c.lambda);
    csv << "theta1,," << Num(t.theta1) << '\n';
    csv << "theta2,," << Num(t.theta2) << '\n';
    for (Eigen::Index u = 0; u < t.theta3.size(); ++u) {
      const std::string cls = std::to_string(u + 1);
      csv << "theta3[" << cls << "],," << Num(t.theta3[u]) << '\n';
      csv << "theta4[" << cls << "],," << Num(t.theta4[u]) << '\n';
      csv << "theta5[" << cls << "],," << Num(t.theta5[u]) << '\n';
    }
    for (Scheme s : c.schemes) {
      const ClusteringAsymptotics a = clustering_asymptotics(c.pi, c.lambda, p, s);
      csv << "clustering:tau2," << to_string(s) << ',' << Num(a.tau2) << '\n';
      csv << "clustering:bias," << to_string(s) << ',' << Num(a.bias) << '\n';
    }
  }
  Emit(o, csv.str());
  return 0;
}

int RunInterval(const Options& o) {
  ExperimentConfig c = BuildExperiment(o);
  const double p = SingleP(c);
  const LoadedGraph loaded = load_graph(o.graph, o.labels, true);
  const PopulationGraph& g = loaded.graph;
  const SbmModel truth = BlockTruth(g);
  const Scheme scheme = SingleScheme(o, Scheme::kInduced);
  const SampleMask mask = o.mask.empty() ? bernoulli_select(g.n(), p, c.seed) : read_mask(o.mask, g.n(), p);
  const SampleView view{&g, mask, scheme};
  const std::vector<std::string> motifs = o.motif.empty() ? c.motifs : o.motif;
  std::ostringstream csv;
  csv << "# n=" << g.n() << '\n';
  csv << "# selected=" << mask.count() << '\n';
  csv << "# p=" << Num(p) << '\n';
  csv << "# level=" << Num(c.level) << '\n';
  csv << "# seed=" << c.seed << '\n';
  csv << "target,scheme,scenario,point,lower,upper,level,bias,sigma_or_tau,feasible\n";
  SpectralOptions spectral = c.spectral;
  spectral.seed = c.seed;
  for (Scenario scenario : c.scenarios) {
    const EstimatedParams est = estimate_params(view, scenario, truth, spectral);
    if (est.any_missing) {
      Fail("EmptyCell", ErrorKind::kNumeric,
           "scenario " + to_string(scenario) + ": a class pair has no observed vertex pair");
    }
    auto row = [&](const std::string& target, const PredictionInterval& pi) {
      csv << target << ',' << to_string(scheme) << ',' << to_string(scenario) << ',' << Num(pi.point)
          << ',' << Num(pi.lower) << ',' << Num(pi.upper) << ',' << Num(pi.level) << ','
          << Num(pi.bias) << ',' << Num(pi.spread) << ',' << (pi.feasible ? 1 : 0) << '\n';
    };
    for (const std::string& spec : motifs) {
      const PatternGraph h = parse_motif(spec);
      const double shat = count_to_double(count_estimated(view, h).value);
      const PredictionInterval count_pi =
          pi_subgraph(shat, h, scheme, est.pi_hat, est.lambda_hat, p, g.n(), c.level);
      row(h.name() + "_density", to_density(count_pi, h.order(), g.n()));
    }
    if (c.clustering) {
      row("clustering", pi_clustering(clustering_estimated(view), scheme, est.pi_hat, est.lambda_hat, p,
                                      g.n(), c.level));
    }
  }
  Emit(o, csv.str());
  return 0;
}

int RunCoverage(const Options& o) {
  const ExperimentConfig c = BuildExperiment(o);
  std::ostringstream csv;
  write_coverage_csv(c, run_coverage(c), csv);
  Emit(o, csv.str());
  return 0;
}

int RunArb(const Options& o) {
  Options copy = o;
  if (copy.scheme.empty()) copy.scheme = {"ego"};
  if (copy.scenario.empty()) copy.scenario = {"c2", "c3", "c4"};
  const ExperimentConfig c = BuildExperiment(copy);
  std::ostringstream csv;
  write_arb_csv(c, arb_bias(c), csv);
  Emit(o, csv.str());
  return 0;
}

int RunSparseProfile(const Options& o) {
  const ExperimentConfig c = BuildExperiment(o);
  const std::vector<std::string> motifs = o.motif.empty() ? c.motifs : o.motif;
  std::ostringstream csv;
  csv << "motif,order,size,t,f1,c,beta_low,beta_high\n";
  for (const std::string& spec : motifs) {
    const PatternGraph h = parse_motif(spec);
    const SparseProfile prof = sparse_profile(h);
    for (std::size_t i = 0; i < prof.f1_values.size(); ++i) {
      csv << h.name() << ',' << prof.order << ',' << prof.size << ',' << i + 2 << ','
          << prof.f1_values[i] << ',' << Num(prof.c) << ",0," << Num(prof.c) << '\n';
    }
  }
  Emit(o, csv.str());
  return 0;
}

int RunSparseClt(const Options& o, bool with_pivots) {
  Options copy = o;
  if (copy.motif.empty() && o.config.empty()) copy.motif = {"edge", "triangle"};
  if (copy.scheme.empty()) copy.scheme = {"induced"};
  const ExperimentConfig c = BuildExperiment(copy);
  if (!(c.beta > 0.0)) Fail("UsageError", ErrorKind::kUsage, "sparse-clt needs --beta in (0,1)");
  const std::vector<PivotSummary> rows = run_sparse_clt(c);
  std::ostringstream csv;
  write_pivot_csv(c, rows, csv);
  if (with_pivots) {
    csv << "motif,replicate,pivot\n";
    for (const PivotSummary& s : rows) {
      for (std::size_t m = 0; m < s.pivots.size(); ++m) {
        csv << s.motif << ',' << m << ',' << Num(s.pivots[m]) << '\n';
      }
    }
  }
  Emit(o, csv.str());
  return 0;
}

int RunAnalyze(const Options& o) {
  ExperimentConfig c = BuildExperiment(o);
  const double p = SingleP(c);
  const Scheme scheme = SingleScheme(o, Scheme::kInduced);
  const AnalysisReport r = analyze_real(o.graph, o.labels, p, scheme, c.level, c.seed);
  std::ostringstream csv;
  csv << "# n=" << r.n << '\n';
  csv << "# dropped_isolated=" << r.dropped_isolated << '\n';
  csv << "# selected=" << r.selected << '\n';
  csv << "# p=" << Num(p) << '\n';
  csv << "# seed=" << c.seed << '\n';
  for (Eigen::Index u = 0; u < r.pi.rows(); ++u) {
    csv << "# lambda" << u + 1 << '=' << Num(r.lambda[u]);
    for (Eigen::Index v = u; v < r.pi.cols(); ++v) {
      csv << " pi" << u + 1 << v + 1 << '=' << Num(r.pi(u, v));
    }
    csv << '\n';
  }
  csv << "target,scheme,true,point,lower,upper,level,bias,sigma_or_tau,covered\n";
  for (const AnalysisRow& row : r.rows) {
    const PredictionInterval& pi = row.interval;
    csv << row.target << ',' << to_string(scheme) << ',' << Num(row.true_value) << ',' << Num(pi.point)
        << ',' << Num(pi.lower) << ',' << Num(pi.upper) << ',' << Num(pi.level) << ','
        << Num(pi.bias) << ',' << Num(pi.spread) << ',' << (pi.contains(row.true_value) ? 1 : 0)
        << '\n';
  }
  Emit(o, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prediction intervals for subgraph counts under Bernoulli node sampling"};
  app.require_subcommand(1);
  Options o;
  bool pivots = false;

  auto* generate_cmd = app.add_subcommand("generate", "Draw a block-model population graph");
  AddCommon(generate_cmd, o);
  auto* sample_cmd = app.add_subcommand("sample", "Draw a Bernoulli node sample (mask)");
  AddCommon(sample_cmd, o);
  sample_cmd->add_option("--graph", o.graph, "Edge list; sets --n from the graph");
  auto* count_cmd = app.add_subcommand("count", "Exact population (and estimated) motif counts");
  AddCommon(count_cmd, o);
  AddGraphInput(count_cmd, o, false);
  count_cmd->add_option("--mask", o.mask, "Mask file; adds estimated counts");
  auto* variance_cmd = app.add_subcommand("variance", "Asymptotic variances and ego functionals");
  AddCommon(variance_cmd, o);
  auto* interval_cmd = app.add_subcommand("interval", "Prediction intervals from one sample");
  AddCommon(interval_cmd, o);
  AddGraphInput(interval_cmd, o, true);
  interval_cmd->add_option("--mask", o.mask, "Mask file (default: draw with --seed)");
  auto* coverage_cmd = app.add_subcommand("simulate-coverage", "Monte-Carlo coverage study");
  AddCommon(coverage_cmd, o);
  coverage_cmd->add_flag("--uncorrected", o.uncorrected, "Also report ego clustering without bias term");
  auto* arb_cmd = app.add_subcommand("arb", "Relative error of the plug-in ego clustering bias");
  AddCommon(arb_cmd, o);
  auto* profile_cmd = app.add_subcommand("sparse-profile", "Densest-subgraph profile and c(H)");
  AddCommon(profile_cmd, o);
  auto* clt_cmd = app.add_subcommand("sparse-clt", "Sparse-regime pivot study");
  AddCommon(clt_cmd, o);
  clt_cmd->add_flag("--pivots", pivots, "Append every replicate pivot");
  auto* analyze_cmd = app.add_subcommand("analyze", "Real-network workflow on a labelled graph");
  AddCommon(analyze_cmd, o);
  AddGraphInput(analyze_cmd, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::kUsage);
  }

  try {
    if (*generate_cmd) return RunGenerate(o);
    if (*sample_cmd) return RunSample(o);
    if (*count_cmd) return RunCount(o);
    if (*variance_cmd) return RunVariance(o);
    if (*interval_cmd) return RunInterval(o);
    if (*coverage_cmd) return RunCoverage(o);
    if (*arb_cmd) return RunArb(o);
    if (*profile_cmd) return RunSparseProfile(o);
    if (*clt_cmd) return RunSparseClt(o, pivots);
    if (*analyze_cmd) return RunAnalyze(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::kNumeric);
  }
  return static_cast<int>(ErrorKind::kUsage);
}
