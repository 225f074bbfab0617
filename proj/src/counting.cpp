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

#include "netsamp/counting.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "netsamp/error.hpp"

namespace netsamp {

std::string count_to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double count_to_double(Count value) { return static_cast<double>(value); }

double MotifCounts::clustering() const {
  return wedge == 0 ? 0.0 : count_to_double(triangle) / count_to_double(wedge);
}

namespace {

void Accumulate(Count& total, Count add) {
  if (__builtin_add_overflow(total, add, &total)) {
    Fail("CountOverflow", ErrorKind::kNumeric, "count exceeds 128 bits");
  }
}

int PopcountAnd(const Word* a, const Word* b, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

int PopcountAnd3(const Word* a, const Word* b, const Word* m, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w] & m[w]);
  return c;
}

template <typename Fn>
void ForEachBit(const Word* bits, int words, Fn&& fn) {
  for (int w = 0; w < words; ++w) {
    Word b = bits[w];
    while (b != 0) {
      fn(w * 64 + std::countr_zero(b));
      b &= b - 1;
    }
  }
}

enum class FastKind { kNone, kEdge, kWedge, kTriangle };

FastKind Classify(const PatternGraph& h) {
  if (h.order() == 2) return FastKind::kEdge;
  if (h.order() == 3) return h.size() == 2 ? FastKind::kWedge : FastKind::kTriangle;
  return FastKind::kNone;
}

void CheckSize(const PopulationGraph& g, const PatternGraph& h) {
  if (h.order() > g.n()) {
    Fail("PatternLargerThanGraph", ErrorKind::kUsage, "R exceeds N");
  }
}

// Backtracking over injective maps, pattern vertices in BFS order.
class Enumerator {
 public:
  Enumerator(const PopulationGraph& g, const PatternGraph& h, const SampleView* view)
      : g_(g), h_(h), view_(view), words_(g.n() == 0 ? 1 : g.words()) {
    const int r = h.order();
    std::vector<bool> placed(r + 1, false);
    order_.push_back(1);
    placed[1] = true;
    for (std::size_t at = 0; at < order_.size(); ++at) {
      for (int v : h.neighbors(order_[at])) {
        if (!placed[v]) {
          placed[v] = true;
          order_.push_back(v);
        }
      }
    }
    position_.assign(r + 1, -1);
    for (int d = 0; d < r; ++d) position_[order_[d]] = d;
    image_.assign(r, -1);
    used_.assign(words_, 0);
    scratch_.assign(std::size_t(r) * words_, 0);
    ones_.assign(words_, ~Word{0});
    if (g.n() % 64 != 0) ones_.back() = (Word{1} << (g.n() % 64)) - 1;
  }

  Count Run() {
    Count total = 0;
    const bool induced = view_ != nullptr && view_->scheme == Scheme::kInduced;
    for (int x = 0; x < g_.n(); ++x) {
      if (induced && !view_->mask.selected(x)) continue;
      Assign(0, x);
      if (h_.order() == 1) {
        Accumulate(total, 1);
      } else {
        Accumulate(total, Extend(1));
      }
      Unassign(0, x);
    }
    return total;
  }

 private:
  void Assign(int depth, int x) {
    image_[depth] = x;
    used_[x >> 6] |= Word{1} << (x & 63);
  }
  void Unassign(int depth, int x) {
    image_[depth] = -1;
    used_[x >> 6] &= ~(Word{1} << (x & 63));
  }

  Count Extend(int depth) {
    Word* cand = scratch_.data() + std::size_t(depth) * words_;
    std::copy(ones_.begin(), ones_.end(), cand);
    bool need_selected = false;
    if (view_ != nullptr && view_->scheme == Scheme::kInduced) need_selected = true;
    for (int u : h_.neighbors(order_[depth])) {
      const int d = position_[u];
      if (d >= depth) continue;
      const Word* row = g_.row(image_[d]);
      for (int w = 0; w < words_; ++w) cand[w] &= row[w];
      if (view_ != nullptr && !view_->mask.selected(image_[d])) need_selected = true;
    }
    for (int w = 0; w < words_; ++w) {
      cand[w] &= ~used_[w];
      if (need_selected) cand[w] &= view_->mask.bits[w];
    }
    if (depth + 1 == h_.order()) {
      int c = 0;
      for (int w = 0; w < words_; ++w) c += std::popcount(cand[w]);
      return static_cast<Count>(c);
    }
    Count total = 0;
    ForEachBit(cand, words_, [&](int x) {
      Assign(depth, x);
      Accumulate(total, Extend(depth + 1));
      Unassign(depth, x);
    });
    return total;
  }

  const PopulationGraph& g_;
  const PatternGraph& h_;
  const SampleView* view_;
  int words_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<int> image_;
  std::vector<Word> used_;
  std::vector<Word> scratch_;
  std::vector<Word> ones_;
};

Count Pick(const MotifCounts& counts, FastKind kind) {
  switch (kind) {
    case FastKind::kEdge: return counts.edge;
    case FastKind::kWedge: return counts.wedge;
    default: return counts.triangle;
  }
}

// Edge and wedge counts only (cheap) for the estimated view.
MotifCounts EstimatedCounts(const SampleView& view, bool with_triangles) {
  const PopulationGraph& g = *view.population;
  const int words = g.words();
  const Word* mask = view.mask.bits.data();
  const bool ego = view.scheme == Scheme::kEgo;
  MotifCounts out;
  Count a_sum = 0, b_sum = 0;  // triangle helpers (see below)
  for (int i = 0; i < g.n(); ++i) {
    const bool wi = view.mask.selected(i);
    const Word* ri = g.row(i);
    int s = 0;
    for (int w = 0; w < words; ++w) s += std::popcount(ri[w] & mask[w]);
    Count deg = static_cast<Count>(s);
    if (ego && wi) deg = static_cast<Count>(g.degree(i));
    if (wi || ego) {
      Accumulate(out.edge, deg);
      if (deg > 1) Accumulate(out.wedge, deg * (deg - 1));
    }
    if (!with_triangles || !wi) continue;
    ForEachBit(ri, words, [&](int j) {
      if (!view.mask.selected(j)) return;
      const Word* rj = g.row(j);
      Accumulate(b_sum, static_cast<Count>(PopcountAnd3(ri, rj, mask, words)));
      if (ego) Accumulate(a_sum, static_cast<Count>(PopcountAnd(ri, rj, words)));
    });
  }
  // Induced: B counts ordered triangles among selected vertices.
  // Ego: a triangle is observed iff at least two of its vertices are
  // selected; with A = 6 t3 + 2 t2 and B = 6 t3 the count is 6(t3+t2) = 3A-2B.
  out.triangle = ego ? 3 * a_sum - 2 * b_sum : b_sum;
  return out;
}

}  // namespace

MotifCounts population_motif_counts(const PopulationGraph& g) {
  MotifCounts out;
  const int words = g.words();
  for (int i = 0; i < g.n(); ++i) {
    const Count d = static_cast<Count>(g.degree(i));
    Accumulate(out.edge, d);
    if (d > 1) Accumulate(out.wedge, d * (d - 1));
    const Word* ri = g.row(i);
    ForEachBit(ri, words, [&](int j) {
      Accumulate(out.triangle, static_cast<Count>(PopcountAnd(ri, g.row(j), words)));
    });
  }
  return out;
}

MotifCounts estimated_motif_counts(const SampleView& view) {
  return EstimatedCounts(view, true);
}

Count count_backtracking(const PopulationGraph& g, const PatternGraph& h,
                         const SampleView* view) {
  CheckSize(g, h);
  return Enumerator(g, h, view).Run();
}

CountResult count_population(const PopulationGraph& g, const PatternGraph& h) {
  CheckSize(g, h);
  CountResult out{0, h.name(), std::nullopt};
  const FastKind kind = Classify(h);
  if (kind == FastKind::kNone) {
    out.value = count_backtracking(g, h, nullptr);
  } else if (kind == FastKind::kTriangle) {
    out.value = population_motif_counts(g).triangle;
  } else {
    MotifCounts c;
    for (int i = 0; i < g.n(); ++i) {
      const Count d = static_cast<Count>(g.degree(i));
      Accumulate(c.edge, d);
      if (d > 1) Accumulate(c.wedge, d * (d - 1));
    }
    out.value = Pick(c, kind);
  }
  return out;
}

CountResult count_estimated(const SampleView& view, const PatternGraph& h) {
  CheckSize(*view.population, h);
  CountResult out{0, h.name(), view.scheme};
  const FastKind kind = Classify(h);
  if (kind == FastKind::kNone) {
    out.value = count_backtracking(*view.population, h, &view);
  } else {
    out.value = Pick(EstimatedCounts(view, kind == FastKind::kTriangle), kind);
  }
  return out;
}

double clustering_population(const PopulationGraph& g) {
  return population_motif_counts(g).clustering();
}

double clustering_estimated(const SampleView& view) {
  return estimated_motif_counts(view).clustering();
}

}  // namespace netsamp
