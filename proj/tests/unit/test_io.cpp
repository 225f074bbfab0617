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


#include <fstream>
#include <sstream>
#include <string>

#include <zlib.h>

#include "doctest.h"
#include "netsamp/io.hpp"
#include "oracles.hpp"

using namespace netsamp;

namespace {

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("pairs parsing") {
  const auto pairs = parse_pairs("# comment\n% other\n1 2\n\n  3\t4 \n");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[1] == std::pair<long long, long long>{3, 4});
  CHECK(oracle::ErrorCode([] { parse_pairs("1 x\n"); }) == "ParseError");
  CHECK(oracle::ErrorCode([] { read_text_file("does/not/exist.txt"); }) == "ParseError");
}

TEST_CASE("load_graph remaps ids, symmetrises and drops isolated vertices") {
  WriteFile("io_edges.txt", "10 20\n20 10\n20 30\n30 30\n");
  WriteFile("io_labels.txt", "10 5\n20 5\n30 9\n40 9\n");
  const LoadedGraph g = load_graph("io_edges.txt", "io_labels.txt", true);
  CHECK(g.graph.n() == 3);
  CHECK(g.ids == std::vector<long long>{10, 20, 30});
  CHECK(g.graph.edge_count() == 2);
  CHECK(g.graph.edge(0, 1));
  CHECK(g.graph.labels() == std::vector<int>{1, 1, 2});
  CHECK(g.dropped_isolated == 1);
  CHECK(g.dropped_self_loops == 1);
  const LoadedGraph keep = load_graph("io_edges.txt", "io_labels.txt", false);
  CHECK(keep.graph.n() == 4);
  WriteFile("io_empty.txt", "");
  CHECK(oracle::ErrorCode([] { load_graph("io_edges.txt", "io_empty.txt", true); }) == "LabelMismatch");
  WriteFile("io_partial.txt", "10 1\n20 1\n");
  CHECK(oracle::ErrorCode([] { load_graph("io_edges.txt", "io_partial.txt", true); }) == "LabelMismatch");
}

TEST_CASE("gzip input is read transparently") {
  gzFile f = gzopen("io_edges.txt.gz", "wb");
  REQUIRE(f != nullptr);
  const std::string text = "1 2\n2 3\n";
  gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
  gzclose(f);
  CHECK(read_text_file("io_edges.txt.gz") == text);
}

TEST_CASE("writers round-trip") {
  PopulationGraph g(4, {1, 2, 1, 2});
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  std::ostringstream edges, labels;
  write_edge_list(g, edges);
  write_labels(g.labels(), labels);
  WriteFile("io_rt_edges.txt", edges.str());
  WriteFile("io_rt_labels.txt", labels.str());
  const LoadedGraph back = load_graph("io_rt_edges.txt", "io_rt_labels.txt", true);
  CHECK(back.graph.edge_list() == g.edge_list());
  CHECK(back.graph.labels() == g.labels());
  const SampleMask mask = bernoulli_select(50, 0.4, 3);
  std::ostringstream m;
  write_mask(mask, m);
  WriteFile("io_mask.txt", m.str());
  CHECK(read_mask("io_mask.txt", 50, 0.4).bits == mask.bits);
  WriteFile("io_badmask.txt", "1\n70\n");
  CHECK(oracle::ErrorCode([] { read_mask("io_badmask.txt", 50, 0.4); }) == "ParseError");
}

TEST_CASE("config parsing") {
  const Config c = parse_config("# header\nn = 100\np_grid=0.1,0.2  # trailing\n\n");
  CHECK(c.at("n") == "100");
  CHECK(parse_list(c.at("p_grid")) == std::vector<double>{0.1, 0.2});
  CHECK(oracle::ErrorCode([] { parse_config("novalue\n"); }) == "ParseError");
  const Eigen::MatrixXd m = parse_matrix("0.1,0.2;0.2,0.3");
  CHECK(m.rows() == 2);
  CHECK(m(1, 0) == 0.2);
  CHECK(oracle::ErrorCode([] { parse_matrix("1,2;3"); }) == "ParseError");
  CHECK(oracle::ErrorCode([] { parse_list("1,abc"); }) == "ParseError");
}
