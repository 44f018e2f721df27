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

#pragma once

// Graph builders and independent brute-force oracles shared by the tests.
// Nothing here calls into the search code it is used to check.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "sclab/graph.hpp"
#include "sclab/random.hpp"

namespace sclab::testing {

inline Graph make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::build(n, edges);
}

inline Graph from_edges(int n, const std::vector<Edge>& edges) {
  return Graph::build(n, edges);
}

inline Graph empty_graph(int n) { return Graph::build(n, {}); }

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::build(n, e);
}

// Path on n vertices.
inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::build(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) e.push_back({u, v});
  }
  return Graph::build(n, e);
}

inline Graph complete_bip(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  }
  return Graph::build(a + b, e);
}

inline Graph star(int leaves) { return complete_bip(1, leaves); }

inline Graph matching(int pairs) {
  std::vector<Edge> e;
  for (int i = 0; i < pairs; ++i) e.push_back({2 * i, 2 * i + 1});
  return Graph::build(2 * pairs, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::build(10, e);
}

// Triangle with delta - 2 pendants on each corner.
inline Graph hairy_triangle(int delta) {
  std::vector<Edge> e = {{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < delta - 2; ++i) e.push_back({c, next++});
  }
  return Graph::build(next, e);
}

// G(n, p) with p = num / den.
inline Graph random_graph(Rng& rng, int n, int num, int den) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (static_cast<int>(rng.below(den)) < num) e.push_back({u, v});
    }
  }
  return Graph::build(n, e);
}

// Uniformly chosen m-subset of the pairs on n vertices.
inline Graph random_graph_m(Rng& rng, int n, int m) {
  std::vector<Edge> all;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) all.push_back({u, v});
  }
  rng.shuffle(std::span<Edge>(all));
  all.resize(std::min<std::size_t>(m, all.size()));
  return Graph::build(n, all);
}

// ---- oracles ------------------------------------------------------------

// Upper-triangle bitmask of g under the relabelling v -> perm[v].
inline std::uint64_t triangle_mask(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) {
    int a = perm[e.u];
    int b = perm[e.v];
    if (a > b) std::swap(a, b);
    mask |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
  }
  return mask;
}

// Minimum relabelled mask over all n! permutations.
inline std::uint64_t brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, triangle_mask(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

namespace detail {
inline bool extend_sequence(const Graph& g, std::vector<int>& seq, int length,
                            bool closed) {
  if (static_cast<int>(seq.size()) == length) {
    return !closed || g.adjacent(seq.back(), seq.front());
  }
  for (int v = 0; v < g.order(); ++v) {
    if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
    if (!seq.empty() && !g.adjacent(seq.back(), v)) continue;
    seq.push_back(v);
    if (extend_sequence(g, seq, length, closed)) return true;
    seq.pop_back();
  }
  return false;
}
}  // namespace detail

// Any sequence of `length` distinct vertices, consecutive ones adjacent
// (and the last adjacent to the first when closed).
inline bool brute_has_cycle(const Graph& g, int k) {
  std::vector<int> seq;
  return detail::extend_sequence(g, seq, k, true);
}

inline bool brute_has_path(const Graph& g, int order) {
  std::vector<int> seq;
  return detail::extend_sequence(g, seq, order, false);
}

// Edges incident or joined by an edge, straight from the definition.
inline bool brute_compatible(const Graph& g, const Edge& a, const Edge& b) {
  for (int x : {a.u, a.v}) {
    for (int y : {b.u, b.v}) {
      if (x == y || g.adjacent(x, y)) return true;
    }
  }
  return false;
}

// Proper colouring of the compatibility relation with `colours` colours,
// plain backtracking without symmetry breaking.
inline bool brute_colourable(const Graph& g, int colours) {
  const auto edges = g.edges();
  std::vector<int> colour(edges.size(), -1);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) return true;
    for (int c = 0; c < colours; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = colour[j] != c || !brute_compatible(g, edges[i], edges[j]);
      }
      if (!ok) continue;
      colour[i] = c;
      if (self(self, i + 1)) return true;
    }
    colour[i] = -1;
    return false;
  };
  return place(place, 0);
}

inline int brute_strong_chromatic_index(const Graph& g) {
  int k = 0;
  while (!brute_colourable(g, k)) ++k;
  return k;
}

}  // namespace sclab::testing
