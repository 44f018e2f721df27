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

#include "sclab/graph.hpp"

#include <algorithm>
#include <string>

#include "sclab/error.hpp"

namespace sclab {

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
  const int n = order();
  for (int u = 0; u < n; ++u) {
    VertexSet upper = rows_[u] & ~all_vertices(u + 1);
    while (upper != 0) {
      const int v = std::countr_zero(upper);
      upper &= upper - 1;
      edges_.push_back({u, v});
    }
  }
}

Graph Graph::build(int n, std::span<const Edge> pairs) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kCapacity, "graph has " + std::to_string(n) +
                                          " vertices; capacity is 64");
  }
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least 1 vertex");
  }
  std::vector<VertexSet> rows(n, 0);
  for (const Edge& e : pairs) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside [0," + std::to_string(n) +
                      ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "loop at vertex " + std::to_string(e.u));
    }
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  if (rows.size() > kMaxVertices) {
    throw Error(ErrorCode::kCapacity, "graph has more than 64 vertices");
  }
  const int n = static_cast<int>(rows.size());
  for (int u = 0; u < n; ++u) {
    if ((rows[u] & ~all_vertices(n)) != 0 || ((rows[u] >> u) & 1U) != 0) {
      throw Error(ErrorCode::kInternal, "adjacency row out of range or loop");
    }
    VertexSet r = rows[u];
    while (r != 0) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      if (((rows[v] >> u) & 1U) == 0) {
        throw Error(ErrorCode::kInternal, "adjacency rows are not symmetric");
      }
    }
  }
  return Graph(std::vector<VertexSet>(rows.begin(), rows.end()));
}

std::optional<EdgeId> Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= order() || !adjacent(u, v)) return std::nullopt;
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  return EdgeId{static_cast<int>(it - edges_.begin())};
}

Graph Graph::with_edge_toggled(int u, int v) const {
  std::vector<VertexSet> rows = rows_;
  rows[u] ^= bit(v);
  rows[v] ^= bit(u);
  return Graph(std::move(rows));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<int> ore_degree(const Graph& g) {
  if (g.size() == 0) return std::nullopt;
  int best = 0;
  for (const Edge& e : g.edges()) {
    best = std::max(best, g.degree(e.u) + g.degree(e.v));
  }
  return best;
}

std::optional<int> ore_degree_of_subgraph(const Graph& g,
                                          std::span<const EdgeId> h_edges) {
  if (h_edges.empty()) return std::nullopt;
  int best = 0;
  for (EdgeId id : h_edges) {
    if (!g.valid(id)) {
      throw Error(ErrorCode::kOutOfRange,
                  "unknown EdgeId " + std::to_string(id.index));
    }
    const Edge& e = g.edge(id);
    best = std::max(best, g.degree(e.u) + g.degree(e.v));
  }
  return best;
}

Graph line_graph(const Graph& g) {
  if (g.size() > kMaxVertices) {
    throw Error(ErrorCode::kCapacity,
                "line graph needs " + std::to_string(g.size()) +
                    " vertices; capacity is 64");
  }
  const auto edges = g.edges();
  const int m = g.size();
  // incident[v] = EdgeIds touching vertex v.
  std::vector<VertexSet> incident(g.order(), 0);
  for (int i = 0; i < m; ++i) {
    incident[edges[i].u] |= bit(i);
    incident[edges[i].v] |= bit(i);
  }
  std::vector<VertexSet> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    rows[i] = (incident[edges[i].u] | incident[edges[i].v]) & ~bit(i);
  }
  return Graph::from_rows(rows);
}

Graph square(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(n, 0);
  for (int v = 0; v < n; ++v) {
    VertexSet reach = g.neighbours(v);
    VertexSet r = g.neighbours(v);
    while (r != 0) {
      const int w = std::countr_zero(r);
      r &= r - 1;
      reach |= g.neighbours(w);
    }
    rows[v] = reach & ~bit(v);
  }
  return Graph::from_rows(rows);
}

std::optional<int> edge_distance(const Graph& g, EdgeId e, EdgeId f) {
  if (!g.valid(e) || !g.valid(f)) {
    throw Error(ErrorCode::kOutOfRange, "unknown EdgeId");
  }
  if (e == f) return 0;
  // BFS over L(g) without materialising it, so any edge count works.
  const auto edges = g.edges();
  std::vector<int> dist(g.size(), -1);
  std::vector<int> queue{e.index};
  dist[e.index] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int cur = queue[head];
    const VertexSet ends = bit(edges[cur].u) | bit(edges[cur].v);
    for (int j = 0; j < g.size(); ++j) {
      if (dist[j] >= 0) continue;
      if (((bit(edges[j].u) | bit(edges[j].v)) & ends) == 0) continue;
      dist[j] = dist[cur] + 1;
      if (j == f.index) return dist[j];
      queue.push_back(j);
    }
  }
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  s &= all_vertices(g.order());
  InducedSubgraph out;
  std::vector<int> index_of(g.order(), -1);
  for (VertexSet r = s; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    index_of[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<VertexSet> rows(out.original.size(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (VertexSet r = g.neighbours(out.original[i]) & s; r != 0; r &= r - 1) {
      rows[i] |= bit(index_of[std::countr_zero(r)]);
    }
  }
  out.graph = Graph::from_rows(rows);
  return out;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  VertexSet seen = 0;
  for (int root = 0; root < n; ++root) {
    if ((seen >> root) & 1U) continue;
    seen |= bit(root);
    VertexSet frontier = bit(root);
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet r = frontier; r != 0; r &= r - 1) {
        next |= g.neighbours(std::countr_zero(r));
      }
      // An edge inside the current layer closes an odd cycle.
      for (VertexSet r = frontier; r != 0; r &= r - 1) {
        if (g.neighbours(std::countr_zero(r)) & frontier) return false;
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
  }
  return true;
}

VertexSet ball(const Graph& g, VertexSet from, int radius) {
  VertexSet reach = from & all_vertices(g.order());
  for (int step = 0; step < radius; ++step) {
    VertexSet next = reach;
    for (VertexSet r = reach; r != 0; r &= r - 1) {
      next |= g.neighbours(std::countr_zero(r));
    }
    if (next == reach) break;
    reach = next;
  }
  return reach;
}

}  // namespace sclab
