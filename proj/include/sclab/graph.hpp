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

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sclab {

inline constexpr int kMaxVertices = 64;

// One bit per vertex; bit v of a row is set iff v is in the set.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr int popcount(VertexSet s) { return std::popcount(s); }
inline constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Stable handle for an edge: its index in Graph::edges().
struct EdgeId {
  int index = 0;
  auto operator<=>(const EdgeId&) const = default;
};

// Simple undirected graph on at most 64 vertices. Immutable once built.
//
// Adjacency is stored as one 64-bit row per vertex. The edge list holds every
// edge once as (u, v) with u < v, sorted lexicographically, so EdgeIds are
// reproducible across runs.
class Graph {
 public:
  Graph() = default;

  // Deduplicates pairs. Throws Error(kCapacity) for n > 64,
  // Error(kOutOfRange) for endpoints outside [0, n) and
  // Error(kInvalidArgument) for loops or n < 1.
  static Graph build(int n, std::span<const Edge> pairs);

  // Builds from adjacency rows; rows must already be symmetric and loop-free.
  // Used by internal transforms that never produce n == 0 errors, so n == 0
  // is accepted here.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  VertexSet neighbours(int v) const { return rows_[v]; }
  std::span<const VertexSet> rows() const { return rows_; }
  int degree(int v) const { return popcount(rows_[v]); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e.index]; }
  bool valid(EdgeId e) const { return e.index >= 0 && e.index < size(); }
  std::optional<EdgeId> edge_id(int u, int v) const;

  // Copy with one edge toggled on or off.
  Graph with_edge_toggled(int u, int v) const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  explicit Graph(std::vector<VertexSet> rows);

  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
};

int max_degree(const Graph& g);

// Largest deg(x) + deg(y) over edges xy; nullopt for edgeless graphs.
std::optional<int> ore_degree(const Graph& g);

// Ore-degree of the subgraph spanned by h_edges, with degrees measured in g.
// Throws Error(kOutOfRange) on an unknown EdgeId; nullopt when h is empty.
std::optional<int> ore_degree_of_subgraph(const Graph& g,
                                          std::span<const EdgeId> h_edges);

// Vertex i of the line graph is EdgeId{i} of g. Throws Error(kCapacity) when
// g has more than 64 edges.
Graph line_graph(const Graph& g);

// g plus an edge between every pair at distance two.
Graph square(const Graph& g);

// BFS distance between e and f in L(g); nullopt when they lie in different
// components.
std::optional<int> edge_distance(const Graph& g, EdgeId e, EdgeId f);

struct InducedSubgraph {
  Graph graph;
  // original[i] is the label in the parent graph of vertex i.
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

bool is_bipartite(const Graph& g);

// Vertices at distance at most `radius` from any vertex of `from`.
VertexSet ball(const Graph& g, VertexSet from, int radius);

}  // namespace sclab
