// Copyright 2026 The sclab Authors
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

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "sclab/error.hpp"
#include "sclab/io.hpp"
#include "sclab/search.hpp"

namespace sclab {
namespace {

// Colour refinement from degrees. Colours are ranks of sorted signatures, so
// they depend only on the isomorphism type of each vertex's surroundings.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<int> around;
      for (VertexSet r = g.neighbours(v); r != 0; r &= r - 1) {
        around.push_back(colour[std::countr_zero(r)]);
      }
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
          distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

// Backtracking over labelings that respect the refined cells. Position p is
// filled from the cell owning p; column p of the adjacency string is fixed as
// soon as p is filled, so any prefix larger than the best is cut.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    const std::vector<int> colour = refine_colours(g);
    std::vector<int> by_colour(n_);
    for (int v = 0; v < n_; ++v) by_colour[v] = v;
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](int a, int b) { return colour[a] < colour[b]; });
    cell_.assign(n_, 0);
    for (int p = 0; p < n_; ++p) {
      const int c = colour[by_colour[p]];
      for (int v = 0; v < n_; ++v) {
        if (colour[v] == c) cell_[p] |= bit(v);
      }
    }
    bits_.assign(n_ * (n_ - 1) / 2, 0);
    perm_.assign(n_, -1);
  }

  std::vector<int> solve() {
    place(0, 0);
    return best_perm_;
  }

 private:
  void place(int p, VertexSet used) {
    if (p == n_) {
      if (best_perm_.empty() || bits_ < best_bits_) {
        best_bits_ = bits_;
        best_perm_ = perm_;
      }
      return;
    }
    const int offset = p * (p - 1) / 2;
    for (VertexSet r = cell_[p] & ~used; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      perm_[p] = v;
      for (int i = 0; i < p; ++i) {
        bits_[offset + i] = g_.adjacent(perm_[i], v) ? 1 : 0;
      }
      if (!best_perm_.empty()) {
        const auto end = offset + p;
        if (std::lexicographical_compare(
                best_bits_.begin(), best_bits_.begin() + end, bits_.begin(),
                bits_.begin() + end)) {
          continue;
        }
      }
      place(p + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<VertexSet> cell_;
  std::vector<std::uint8_t> bits_;
  std::vector<int> perm_;
  std::vector<std::uint8_t> best_bits_;
  std::vector<int> best_perm_;
};

std::vector<Graph> extend_classes(const std::vector<Graph>& smaller, int n) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  for (const Graph& base : smaller) {
    std::vector<VertexSet> rows(base.rows().begin(), base.rows().end());
    rows.push_back(0);
    const VertexSet choices = all_vertices(n - 1);
    // Every subset of the old vertices as the new vertex's neighbourhood.
    VertexSet subset = 0;
    do {
      std::vector<VertexSet> r = rows;
      r[n - 1] = subset;
      for (VertexSet s = subset; s != 0; s &= s - 1) {
        r[std::countr_zero(s)] |= bit(n - 1);
      }
      Graph candidate = canonical_graph(Graph::from_rows(r));
      std::string key = format_graph6(candidate);
      if (seen.insert(key).second) {
        found.emplace_back(std::move(key), std::move(candidate));
      }
      subset = (subset - choices) & choices;
    } while (subset != 0);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.order() <= 1) return g;
  const std::vector<int> perm = CanonicalSearch(g).solve();
  std::vector<int> position(g.order());
  for (int p = 0; p < g.order(); ++p) position[perm[p]] = p;
  std::vector<VertexSet> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (VertexSet r = g.neighbours(v); r != 0; r &= r - 1) {
      rows[position[v]] |= bit(position[std::countr_zero(r)]);
    }
  }
  return Graph::from_rows(rows);
}

std::string canonical_form(const Graph& g) {
  return format_graph6(canonical_graph(g));
}

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kOutOfRange,
                "built-in enumeration covers 1 <= n <= 8; got " +
                    std::to_string(n) + " (feed larger sets as graph6)");
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) {
    const Edge none[] = {{0, 0}};
    cache[1] = {Graph::build(1, std::span<const Edge>(none, 0))};
  }
  for (int m = 2; m <= n; ++m) {
    if (!cache.count(m)) cache[m] = extend_classes(cache[m - 1], m);
  }
  return cache[n];
}

}  // namespace sclab
