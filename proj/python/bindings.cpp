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


// Python bindings for the netsamp core (module netsamp._core).

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace netsamp;

namespace {

// 128-bit counts become arbitrary-precision Python ints.
py::int_ ToPyInt(Count value) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(count_to_string(value).c_str(), nullptr, 10)));
}

PatternGraph AsPattern(const py::object& motif) {
  if (py::isinstance<PatternGraph>(motif)) return motif.cast<PatternGraph>();
  return parse_motif(motif.cast<std::string>());
}

Scheme AsScheme(const std::string& text) { return parse_scheme(text); }

py::dict IntervalDict(const PredictionInterval& pi) {
  py::dict d;
  d["pattern"] = pi.pattern;
  d["scheme"] = to_string(pi.scheme);
  d["level"] = pi.level;
  d["point"] = pi.point;
  d["lower"] = pi.lower;
  d["upper"] = pi.upper;
  d["bias"] = pi.bias;
  d["spread"] = pi.spread;
  d["feasible"] = pi.feasible;
  return d;
}

ExperimentConfig MakeConfig(int n, std::vector<double> p, int reps, std::vector<std::string> schemes,
                            std::vector<std::string> scenarios, double level, std::uint64_t seed,
                            std::vector<std::string> motifs, int threads, double beta,
                            std::optional<Eigen::MatrixXd> pi, std::optional<Eigen::VectorXd> lambda,
                            bool uncorrected) {
  ExperimentConfig c = default_experiment();
  c.n = n;
  c.p_grid = std::move(p);
  c.replicates = reps;
  c.schemes.clear();
  for (const auto& s : schemes) c.schemes.push_back(parse_scheme(s));
  c.scenarios.clear();
  for (const auto& s : scenarios) c.scenarios.push_back(parse_scenario(s));
  c.level = level;
  c.seed = seed;
  c.motifs = std::move(motifs);
  c.threads = threads;
  c.beta = beta;
  c.uncorrected_clustering = uncorrected;
  if (beta > 0.0 && !pi) c.pi = sparse_simulation_c();
  if (pi) c.pi = *pi;
  c.lambda = lambda ? *lambda
                    : Eigen::VectorXd::Constant(c.pi.rows(), 1.0 / static_cast<double>(c.pi.rows()));
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prediction intervals for subgraph counts under Bernoulli node sampling";

  static py::exception<Error> error(m, "NetsampError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<PatternGraph>(m, "Pattern")
      .def(py::init([](int order, const std::vector<VertexPair>& edges, std::string name) {
             return make_pattern(order, edges, std::move(name));
           }),
           py::arg("order"), py::arg("edges"), py::arg("name") = "custom")
      .def_static("parse", &parse_motif, py::arg("spec"))
      .def_property_readonly("order", &PatternGraph::order)
      .def_property_readonly("size", &PatternGraph::size)
      .def_property_readonly("name", &PatternGraph::name)
      .def_property_readonly("edges", &PatternGraph::edges)
      .def("__repr__", [](const PatternGraph& h) {
        return "<Pattern " + h.name() + " R=" + std::to_string(h.order()) +
               " T=" + std::to_string(h.size()) + ">";
      });

  py::class_<PopulationGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges, std::vector<int> labels) {
             PopulationGraph g(n, std::move(labels));
             for (const auto& [i, j] : edges) g.add_edge(i, j);
             return g;
           }),
           py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<int>{})
      .def_property_readonly("n", &PopulationGraph::n)
      .def_property_readonly("labels", &PopulationGraph::labels)
      .def("edge_count", &PopulationGraph::edge_count)
      .def("edges", &PopulationGraph::edge_list)
      .def("has_edge", &PopulationGraph::edge);

  py::class_<SampleMask>(m, "Mask")
      .def_readonly("n", &SampleMask::n)
      .def_readonly("p", &SampleMask::p)
      .def_readonly("seed", &SampleMask::seed)
      .def("selected", &SampleMask::selected_vertices)
      .def("count", &SampleMask::count)
      .def("__contains__", &SampleMask::selected);

  m.def("simulation_pi", &simulation_pi);
  m.def("sparse_simulation_c", &sparse_simulation_c);

  m.def(
      "generate",
      [](int n, const Eigen::MatrixXd& pi, std::optional<Eigen::VectorXd> lambda, std::uint64_t seed,
         double beta) {
        const Eigen::VectorXd l =
            lambda ? *lambda : Eigen::VectorXd::Constant(pi.rows(), 1.0 / static_cast<double>(pi.rows()));
        SbmModel model;
        if (beta > 0.0) {
          model = materialize_sparse(SparseSbmSpec{pi, l, beta}, n);
        } else {
          model.pi = pi;
          model.lambda = l;
        }
        model.labels = model_labels(model, n);
        return generate(model, n, seed);
      },
      py::arg("n"), py::arg("pi"), py::arg("lambda_") = py::none(), py::arg("seed") = 1,
      py::arg("beta") = 0.0, "Draw a block-model graph; labels are 1-based classes.");

  m.def("load_graph", [](const std::string& edges, const std::string& labels, bool drop_isolated) {
    return load_graph(edges, labels, drop_isolated).graph;
  }, py::arg("edges"), py::arg("labels") = "", py::arg("drop_isolated") = false);

  m.def("bernoulli_select", &bernoulli_select, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("mask_from_indicators", &mask_from_indicators, py::arg("indicators"), py::arg("p"));

  m.def("count_population", [](const PopulationGraph& g, const py::object& motif) {
    return ToPyInt(count_population(g, AsPattern(motif)).value);
  }, py::arg("graph"), py::arg("motif"));
  m.def(
      "count_estimated",
      [](const PopulationGraph& g, const SampleMask& mask, const py::object& motif,
         const std::string& scheme) {
        return ToPyInt(count_estimated(SampleView{&g, mask, AsScheme(scheme)}, AsPattern(motif)).value);
      },
      py::arg("graph"), py::arg("mask"), py::arg("motif"), py::arg("scheme") = "induced");
  m.def("clustering_population", &clustering_population, py::arg("graph"));
  m.def(
      "clustering_estimated",
      [](const PopulationGraph& g, const SampleMask& mask, const std::string& scheme) {
        return clustering_estimated(SampleView{&g, mask, AsScheme(scheme)});
      },
      py::arg("graph"), py::arg("mask"), py::arg("scheme") = "induced");

  m.def("ego_functionals", [](const py::object& motif, double p) {
    const EgoFunctionals e = ego_functionals(AsPattern(motif), p);
    py::dict d;
    d["f"] = e.f;
    d["delta"] = e.delta;
    d["g1"] = e.g1;
    d["g2"] = e.g2;
    return d;
  }, py::arg("motif"), py::arg("p"));
  m.def(
      "sigma2",
      [](const py::object& motif, const Eigen::MatrixXd& pi, const Eigen::VectorXd& lambda, double p,
         const std::string& scheme) { return sigma2(AsPattern(motif), pi, lambda, p, AsScheme(scheme)).sigma2; },
      py::arg("motif"), py::arg("pi"), py::arg("lambda_"), py::arg("p"), py::arg("scheme") = "induced");
  m.def(
      "clustering_asymptotics",
      [](const Eigen::MatrixXd& pi, const Eigen::VectorXd& lambda, double p, const std::string& scheme) {
        const ClusteringAsymptotics a = clustering_asymptotics(pi, lambda, p, AsScheme(scheme));
        return py::make_tuple(a.tau2, a.bias);
      },
      py::arg("pi"), py::arg("lambda_"), py::arg("p"), py::arg("scheme") = "induced",
      "Returns (tau2, bias).");

  m.def(
      "density_interval",
      [](double shat, const py::object& motif, const std::string& scheme, const Eigen::MatrixXd& pi,
         const Eigen::VectorXd& lambda, double p, long long n, double level) {
        const PatternGraph h = AsPattern(motif);
        return IntervalDict(
            to_density(pi_subgraph(shat, h, AsScheme(scheme), pi, lambda, p, n, level), h.order(), n));
      },
      py::arg("shat"), py::arg("motif"), py::arg("scheme"), py::arg("pi"), py::arg("lambda_"),
      py::arg("p"), py::arg("n"), py::arg("level") = 0.95);
  m.def(
      "count_interval",
      [](double shat, const py::object& motif, const std::string& scheme, const Eigen::MatrixXd& pi,
         const Eigen::VectorXd& lambda, double p, long long n, double level) {
        return IntervalDict(pi_subgraph(shat, AsPattern(motif), AsScheme(scheme), pi, lambda, p, n, level));
      },
      py::arg("shat"), py::arg("motif"), py::arg("scheme"), py::arg("pi"), py::arg("lambda_"),
      py::arg("p"), py::arg("n"), py::arg("level") = 0.95);
  m.def(
      "clustering_interval",
      [](double gamma_hat, const std::string& scheme, const Eigen::MatrixXd& pi,
         const Eigen::VectorXd& lambda, double p, long long n, double level, bool correct_bias) {
        return IntervalDict(
            pi_clustering(gamma_hat, AsScheme(scheme), pi, lambda, p, n, level, correct_bias));
      },
      py::arg("gamma_hat"), py::arg("scheme"), py::arg("pi"), py::arg("lambda_"), py::arg("p"),
      py::arg("n"), py::arg("level") = 0.95, py::arg("correct_bias") = true);

  m.def("sparse_profile", [](const py::object& motif) {
    const SparseProfile s = sparse_profile(AsPattern(motif));
    py::dict d;
    d["order"] = s.order;
    d["size"] = s.size;
    d["f1"] = s.f1_values;
    d["c"] = s.c;
    return d;
  }, py::arg("motif"));

  m.def("normal_quantile", &normal_quantile, py::arg("q"));

#define NETSAMP_CONFIG_ARGS                                                                        \
  py::arg("n") = 2000, py::arg("p") = std::vector<double>{0.1}, py::arg("reps") = 500,             \
  py::arg("schemes") = std::vector<std::string>{"induced", "ego"},                                \
  py::arg("scenarios") = std::vector<std::string>{"c1"}, py::arg("level") = 0.95,                 \
  py::arg("seed") = 1, py::arg("motifs") = std::vector<std::string>{"edge", "wedge", "triangle"}, \
  py::arg("threads") = 0, py::arg("beta") = 0.0, py::arg("pi") = py::none(),                      \
  py::arg("lambda_") = py::none(), py::arg("uncorrected") = false

  m.def(
      "run_coverage",
      [](int n, std::vector<double> p, int reps, std::vector<std::string> schemes,
         std::vector<std::string> scenarios, double level, std::uint64_t seed,
         std::vector<std::string> motifs, int threads, double beta, std::optional<Eigen::MatrixXd> pi,
         std::optional<Eigen::VectorXd> lambda, bool uncorrected) {
        const ExperimentConfig c = MakeConfig(n, std::move(p), reps, std::move(schemes),
                                              std::move(scenarios), level, seed, std::move(motifs),
                                              threads, beta, std::move(pi), std::move(lambda), uncorrected);
        std::vector<CoverageRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_coverage(c);
        }
        py::list out;
        for (const CoverageRow& r : rows) {
          py::dict d;
          d["target"] = r.target;
          d["scheme"] = to_string(r.scheme);
          d["scenario"] = to_string(r.scenario);
          d["p"] = r.p;
          d["coverage"] = r.coverage;
          d["avg_length"] = r.avg_length;
          d["replicates"] = r.replicates;
          d["failures"] = r.failures;
          d["mean_error"] = r.mean_error;
          d["sd_error"] = r.sd_error;
          out.append(d);
        }
        return out;
      },
      NETSAMP_CONFIG_ARGS);

  m.def(
      "arb_bias",
      [](int n, std::vector<double> p, int reps, std::vector<std::string> schemes,
         std::vector<std::string> scenarios, double level, std::uint64_t seed,
         std::vector<std::string> motifs, int threads, double beta, std::optional<Eigen::MatrixXd> pi,
         std::optional<Eigen::VectorXd> lambda, bool uncorrected) {
        const ExperimentConfig c = MakeConfig(n, std::move(p), reps, std::move(schemes),
                                              std::move(scenarios), level, seed, std::move(motifs),
                                              threads, beta, std::move(pi), std::move(lambda), uncorrected);
        std::vector<ArbRow> rows;
        {
          py::gil_scoped_release release;
          rows = arb_bias(c);
        }
        py::list out;
        for (const ArbRow& r : rows) {
          py::dict d;
          d["scenario"] = to_string(r.scenario);
          d["p"] = r.p;
          d["true_bias"] = r.true_bias;
          d["arb_percent"] = r.arb_percent;
          d["replicates"] = r.replicates;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      NETSAMP_CONFIG_ARGS);

  m.def(
      "run_sparse_clt",
      [](int n, std::vector<double> p, int reps, std::vector<std::string> schemes,
         std::vector<std::string> scenarios, double level, std::uint64_t seed,
         std::vector<std::string> motifs, int threads, double beta, std::optional<Eigen::MatrixXd> pi,
         std::optional<Eigen::VectorXd> lambda, bool uncorrected) {
        const ExperimentConfig c = MakeConfig(n, std::move(p), reps, std::move(schemes),
                                              std::move(scenarios), level, seed, std::move(motifs),
                                              threads, beta, std::move(pi), std::move(lambda), uncorrected);
        std::vector<PivotSummary> rows;
        {
          py::gil_scoped_release release;
          rows = run_sparse_clt(c);
        }
        py::list out;
        for (const PivotSummary& s : rows) {
          py::dict d;
          d["motif"] = s.motif;
          d["beta"] = s.beta;
          d["admissible"] = s.admissible;
          d["mean"] = s.mean;
          d["variance"] = s.variance;
          d["ks_distance"] = s.ks_distance;
          d["bin_edges"] = s.bin_edges;
          d["bin_counts"] = s.bin_counts;
          d["pivots"] = s.pivots;
          out.append(d);
        }
        return out;
      },
      NETSAMP_CONFIG_ARGS);
#undef NETSAMP_CONFIG_ARGS

  m.def(
      "analyze",
      [](const PopulationGraph& g, double p, const std::string& scheme, double level, std::uint64_t seed) {
        const AnalysisReport r = analyze_graph(g, p, AsScheme(scheme), level, seed);
        py::dict d;
        d["n"] = r.n;
        d["selected"] = r.selected;
        d["pi"] = r.pi;
        d["lambda"] = r.lambda;
        py::list rows;
        for (const AnalysisRow& row : r.rows) {
          py::dict rd = IntervalDict(row.interval);
          rd["target"] = row.target;
          rd["true"] = row.true_value;
          rows.append(rd);
        }
        d["rows"] = rows;
        return d;
      },
      py::arg("graph"), py::arg("p"), py::arg("scheme") = "induced", py::arg("level") = 0.95,
      py::arg("seed") = 1);
}
