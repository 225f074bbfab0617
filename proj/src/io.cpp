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

#include "netsamp/io.hpp"

#include <zlib.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "netsamp/error.hpp"

namespace netsamp {

std::string read_text_file(const std::string& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) Fail("ParseError", ErrorKind::kData, "cannot open " + path);
  std::string out;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file, buffer, sizeof(buffer))) > 0) out.append(buffer, got);
  const bool failed = got < 0;
  gzclose(file);
  if (failed) Fail("ParseError", ErrorKind::kData, "read error in " + path);
  return out;
}

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::pair<long long, long long>> parse_pairs(const std::string& text) {
  std::vector<std::pair<long long, long long>> out;
  std::istringstream in(text);
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#' || t[0] == '%') continue;
    std::istringstream fields(t);
    long long a = 0, b = 0;
    if (!(fields >> a >> b)) {
      Fail("ParseError", ErrorKind::kData,
           "line " + std::to_string(line_no) + ": expected two integers");
    }
    out.emplace_back(a, b);
  }
  return out;
}

LoadedGraph load_graph(const std::string& edge_path, const std::string& label_path,
                       bool drop_isolated) {
  const auto edges = parse_pairs(read_text_file(edge_path));
  std::unordered_map<long long, long long> raw_labels;
  std::set<long long> ids;
  LoadedGraph out;
  for (const auto& [u, v] : edges) {
    if (u == v) {
      ++out.dropped_self_loops;
      if (!drop_isolated) ids.insert(u);
      continue;
    }
    ids.insert(u);
    ids.insert(v);
  }
  const bool labelled = !label_path.empty();
  if (labelled) {
    const auto pairs = parse_pairs(read_text_file(label_path));
    if (pairs.empty()) Fail("LabelMismatch", ErrorKind::kData, "label file is empty");
    for (const auto& [u, k] : pairs) {
      raw_labels[u] = k;
      if (!drop_isolated) ids.insert(u);
    }
  }
  out.ids.assign(ids.begin(), ids.end());
  std::unordered_map<long long, int> index;
  for (std::size_t i = 0; i < out.ids.size(); ++i) index[out.ids[i]] = static_cast<int>(i);
  std::vector<int> labels;
  if (labelled) {
    std::set<long long> classes;
    for (long long id : out.ids) {
      auto it = raw_labels.find(id);
      if (it == raw_labels.end()) {
        Fail("LabelMismatch", ErrorKind::kData, "vertex " + std::to_string(id) + " has no label");
      }
      classes.insert(it->second);
    }
    std::map<long long, int> class_index;
    for (long long c : classes) class_index.emplace(c, static_cast<int>(class_index.size()) + 1);
    for (long long id : out.ids) labels.push_back(class_index[raw_labels[id]]);
    if (drop_isolated) {
      std::set<long long> labelled_ids;
      for (const auto& [u, k] : raw_labels) labelled_ids.insert(u);
      for (long long u : labelled_ids) {
        if (!index.count(u)) ++out.dropped_isolated;
      }
    }
  }
  out.graph = PopulationGraph(static_cast<int>(out.ids.size()), labels);
  for (const auto& [u, v] : edges) {
    if (u != v) out.graph.add_edge(index[u], index[v]);
  }
  return out;
}

void write_edge_list(const PopulationGraph& g, std::ostream& out) {
  for (const auto& [i, j] : g.edge_list()) out << i << ' ' << j << '\n';
}

void write_labels(const std::vector<int>& labels, std::ostream& out) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > 0) out << i << ' ' << labels[i] << '\n';
  }
}

void write_mask(const SampleMask& mask, std::ostream& out) {
  for (int i : mask.selected_vertices()) out << i << '\n';
}

SampleMask read_mask(const std::string& path, int n, double p) {
  std::istringstream in(read_text_file(path));
  std::vector<int> indicators(n, 0);
  long long id = 0;
  while (in >> id) {
    if (id < 0 || id >= n) Fail("ParseError", ErrorKind::kData, "mask id outside 0..N-1");
    indicators[id] = 1;
  }
  if (!in.eof()) Fail("ParseError", ErrorKind::kData, "non-integer token in mask file");
  return mask_from_indicators(indicators, p);
}

Config parse_config(const std::string& text) {
  Config out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string t = Trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      Fail("ParseError", ErrorKind::kData, "config line " + std::to_string(line_no) + ": missing '='");
    }
    out[Trim(t.substr(0, eq))] = Trim(t.substr(eq + 1));
  }
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const std::string t = Trim(item);
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      Fail("ParseError", ErrorKind::kData, "bad number '" + t + "'");
    }
  }
  return out;
}

Eigen::MatrixXd parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::string row;
  std::istringstream in(text);
  while (std::getline(in, row, ';')) {
    if (Trim(row).empty()) continue;
    rows.push_back(parse_list(row));
  }
  if (rows.empty()) Fail("ParseError", ErrorKind::kData, "empty matrix");
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) Fail("ParseError", ErrorKind::kData, "ragged matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace netsamp
