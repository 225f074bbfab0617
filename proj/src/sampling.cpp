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

#include "netsamp/sampling.hpp"

#include <bit>

#include "netsamp/error.hpp"
#include "netsamp/rng.hpp"

namespace netsamp {

std::string to_string(Scheme scheme) {
  return scheme == Scheme::kInduced ? "induced" : "ego";
}

Scheme parse_scheme(const std::string& text) {
  if (text == "induced") return Scheme::kInduced;
  if (text == "ego") return Scheme::kEgo;
  Fail("UsageError", ErrorKind::kUsage, "scheme must be induced or ego");
}

int SampleMask::count() const {
  int total = 0;
  for (Word w : bits) total += std::popcount(w);
  return total;
}

std::vector<int> SampleMask::selected_vertices() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (selected(i)) out.push_back(i);
  return out;
}

SampleMask bernoulli_select(int n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) {
    Fail("InvalidProbability", ErrorKind::kUsage, "p must lie strictly in (0,1)");
  }
  SampleMask mask{n, p, seed, std::vector<Word>(WordsFor(n), 0)};
  const std::uint64_t key = Mix64(seed, kMaskDomain);
  for (int i = 0; i < n; ++i) {
    if (CounterUniform(key, i) < p) mask.bits[i >> 6] |= Word{1} << (i & 63);
  }
  return mask;
}

SampleMask mask_from_indicators(const std::vector<int>& indicators, double p) {
  const int n = static_cast<int>(indicators.size());
  SampleMask mask{n, p, 0, std::vector<Word>(WordsFor(n), 0)};
  for (int i = 0; i < n; ++i) {
    if (indicators[i] != 0) mask.bits[i >> 6] |= Word{1} << (i & 63);
  }
  return mask;
}

bool SampleView::is_observed(int i, int j) const {
  if (i == j) Fail("SelfPairQueried", ErrorKind::kUsage, "i == j");
  return scheme == Scheme::kInduced ? (mask.selected(i) && mask.selected(j))
                                    : (mask.selected(i) || mask.selected(j));
}

int inclusion_weight(const PatternGraph& h, Scheme scheme,
                     std::span<const int> tuple, const SampleMask& mask) {
  for (std::size_t a = 0; a < tuple.size(); ++a)
    for (std::size_t b = a + 1; b < tuple.size(); ++b)
      if (tuple[a] == tuple[b]) Fail("NonDistinctTuple", ErrorKind::kUsage, "repeated vertex");
  for (const auto& [i, j] : h.edges()) {
    const bool wi = mask.selected(tuple[i - 1]);
    const bool wj = mask.selected(tuple[j - 1]);
    if (scheme == Scheme::kInduced ? !(wi && wj) : !(wi || wj)) return 0;
  }
  return 1;
}

}  // namespace netsamp
