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

#include <optional>
#include <vector>

#include "sclab/fraction.hpp"
#include "sclab/graph.hpp"

namespace sclab {

// Fixed-length subgraph cycles and paths. Cycles are not required to be
// induced; a C_k-free graph has no k distinct vertices closing a cycle.

// A cycle on exactly k vertices, listed in order (the closing edge joins the
// last vertex to the first). Throws Error(kOutOfRange) unless 3 <= k <= n.
std::optional<std::vector<int>> find_cycle(const Graph& g, int k);
inline bool contains_cycle(const Graph& g, int k) {
  return find_cycle(g, k).has_value();
}

// A path on exactly `order` vertices. Throws Error(kOutOfRange) unless
// 2 <= order <= n.
std::optional<std::vector<int>> find_path(const Graph& g, int order);
inline bool contains_path(const Graph& g, int order) {
  return find_path(g, order).has_value();
}

// True iff some path on exactly `order` vertices runs from `from` to `to`.
// The hunt uses this on g minus an edge uv to decide whether adding uv closes
// a cycle of length `order`.
bool has_path_between(const Graph& g, int from, int to, int order);

// True iff adding the absent edge uv to g creates a cycle of length k.
bool closes_cycle(const Graph& g, int u, int v, int k);

struct CycleProfile {
  int vertex_count = 0;
  int max_len = 0;
  // cycle_flags[k] for k in [0, max_len]; entries below 3 are false.
  std::vector<bool> cycle_flags;
  // path_flags[p] for p in [0, max_len + 1]; entries below 2 are unused.
  std::vector<bool> path_flags;
  std::optional<int> girth;

  // Lengths above the vertex count are answered (false) without search.
  // Lengths between max_len and the vertex count were never computed and
  // throw Error(kOutOfRange).
  bool has_cycle(int k) const;
  bool has_path(int order) const;
};

// max_len is clamped to the vertex count.
CycleProfile cycle_profile(const Graph& g, int max_len);

struct BranchingReport {
  VertexSet base_set = 0;
  int threshold = 0;
  std::vector<EdgeId> branching_edges;
  int count() const { return static_cast<int>(branching_edges.size()); }
};

// Edges uv with u in s, v outside s and |N(v) & s| >= b.
BranchingReport branching_edges(const Graph& g, VertexSet s, int b);

// The bipartite subgraph G[S x (V \ S)] on the same vertex set.
Graph cross_subgraph(const Graph& g, VertexSet s);

struct KsatCheck {
  bool applicable = false;  // G[X x (V \ X)] has no path on 2k+1 vertices
  int branching_count = 0;  // k-branching edges out of X
  std::int64_t bound = 0;   // k^2 |X|
  bool holds = true;
};

// Turan-type count of k-branching edges. Requires k >= 2.
KsatCheck check_ksat(const Graph& g, VertexSet x, int k);

struct ErdosGallaiCheck {
  bool applicable = false;  // g has no path on ell+1 vertices
  int edges = 0;
  Fraction bound;           // (ell - 1) |G| / 2
  bool holds = true;
};

// Requires ell >= 2.
ErdosGallaiCheck check_erdos_gallai(const Graph& g, int ell);

}  // namespace sclab
