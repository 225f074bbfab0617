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

// Text formats: edge lists "u v", labels "u k", masks (one selected id per
// line) and key=value configuration files. Reading is gzip-transparent.

#ifndef NETSAMP_IO_HPP_
#define NETSAMP_IO_HPP_

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "netsamp/population.hpp"
#include "netsamp/sampling.hpp"

namespace netsamp {

// Whole file, decompressed when gzip-encoded. Error: ParseError.
std::string read_text_file(const std::string& path);

// Integer pairs, one per non-comment line ('#' or '%' start comments).
std::vector<std::pair<long long, long long>> parse_pairs(const std::string& text);

struct LoadedGraph {
  PopulationGraph graph;         // vertices 0..N-1
  std::vector<long long> ids;    // external id of each vertex
  long long dropped_isolated = 0;
  long long dropped_self_loops = 0;
};

// Builds an undirected simple graph from an edge list (directions and
// duplicates collapsed). With a label file, labels are remapped to 1..K in
// increasing order of the raw class value and every kept vertex must carry
// one. Vertices are ordered by external id.
// Errors: ParseError, LabelMismatch.
LoadedGraph load_graph(const std::string& edge_path, const std::string& label_path,
                       bool drop_isolated);

void write_edge_list(const PopulationGraph& g, std::ostream& out);
void write_labels(const std::vector<int>& labels, std::ostream& out);
void write_mask(const SampleMask& mask, std::ostream& out);
// Reads selected ids (0-based) into a mask over n vertices.
SampleMask read_mask(const std::string& path, int n, double p);

using Config = std::map<std::string, std::string>;

// "key = value" lines; '#' starts a comment. Error: ParseError.
Config parse_config(const std::string& text);

// "a,b,c;d,e,f" -> matrix (rows separated by ';'). Error: ParseError.
Eigen::MatrixXd parse_matrix(const std::string& text);
std::vector<double> parse_list(const std::string& text);

}  // namespace netsamp

#endif  // NETSAMP_IO_HPP_
