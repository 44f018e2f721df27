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

#include "sclab/reduction.hpp"

#include <algorithm>
#include <string>

#include "sclab/error.hpp"

namespace sclab {
namespace {

std::vector<bool> membership(const Graph& g, const StrongCliqueWitness& h) {
  std::vector<bool> in_h(g.size(), false);
  for (EdgeId id : h.edge_ids) {
    if (!g.valid(id)) {
      throw Error(ErrorCode::kOutOfRange,
                  "unknown EdgeId " + std::to_string(id.index));
    }
    in_h[id.index] = true;
  }
  return in_h;
}

bool is_h_edge(const Graph& g, const std::vector<bool>& in_h, int a, int b) {
  const auto id = g.edge_id(a, b);
  return id && in_h[id->index];
}

VertexSet set_of(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

// H edges touching none of `interior`, minus the edge joining the two ends.
std::vector<EdgeId> unused_h_edges(const Graph& g,
                                   const StrongCliqueWitness& h,
                                   VertexSet interior, int first, int last) {
  std::vector<EdgeId> out;
  for (EdgeId id : h.edge_ids) {
    const Edge& e = g.edge(id);
    if ((bit(e.u) | bit(e.v)) & interior) continue;
    if ((e.u == first && e.v == last) || (e.u == last && e.v == first)) {
      continue;
    }
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_path(const Graph& g, const std::vector<int>& vertices,
                  ErrorCode code) {
  VertexSet seen = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order()) {
      throw Error(code, "path vertex out of range");
    }
    if ((seen >> v) & 1U) {
      throw Error(code, "path repeats vertex " + std::to_string(v));
    }
    seen |= bit(v);
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) {
      throw Error(code, "path vertices " + std::to_string(vertices[i - 1]) +
                            " and " + std::to_string(v) + " are not adjacent");
    }
  }
}

}  // namespace

ReductionResult bipartite_reduction(const Graph& g,
                                    const StrongCliqueWitness& witness) {
  if (witness.edge_ids.empty()) {
    throw Error(ErrorCode::kPrecondition, "reduction needs a nonempty witness");
  }
  const EdgeId first = *std::min_element(witness.edge_ids.begin(),
                                         witness.edge_ids.end());
  if (!g.valid(first)) throw Error(ErrorCode::kOutOfRange, "unknown EdgeId");
  const Edge anchor = g.edge(first);
  const VertexSet keep = ball(g, bit(anchor.u) | bit(anchor.v), 2);
  InducedSubgraph sub = induced_subgraph(g, keep);
  return {std::move(sub.graph), std::move(sub.original), anchor};
}

void validate_h_sided(const Graph& g, const HSidedPath& path) {
  if (path.vertices.size() < 2) {
    throw Error(ErrorCode::kInternal, "H-sided path needs two vertices");
  }
  require_path(g, path.vertices, ErrorCode::kInternal);
  StrongCliqueWitness h{path.h_edges};
  const std::vector<bool> in_h = membership(g, h);
  const auto& v = path.vertices;
  if (!is_h_edge(g, in_h, v[0], v[1])) {
    throw Error(ErrorCode::kInternal, "first path edge is not in H");
  }
  if (!is_h_edge(g, in_h, v[v.size() - 2], v.back())) {
    throw Error(ErrorCode::kInternal, "last path edge is not in H");
  }
}

StepResult step_h_sided_path(const Graph& g, const StrongCliqueWitness& h,
                             const std::vector<int>& interior,
                             const std::vector<int>& full) {
  if (interior.empty() || full.size() != interior.size() + 2 ||
      !std::equal(interior.begin(), interior.end(), full.begin() + 1)) {
    throw Error(ErrorCode::kPrecondition,
                "path state must be first vertex + interior + last vertex");
  }
  require_path(g, full, ErrorCode::kPrecondition);
  const std::vector<bool> in_h = membership(g, h);
  const int first = full.front();
  const int last = full.back();
  if (!is_h_edge(g, in_h, first, full[1]) ||
      !is_h_edge(g, in_h, full[full.size() - 2], last)) {
    throw Error(ErrorCode::kPrecondition, "path ends are not edges of H");
  }

  StepResult out;
  out.interior = interior;
  out.full = full;
  const std::vector<EdgeId> unused =
      unused_h_edges(g, h, set_of(interior), first, last);
  if (unused.empty()) return out;

  // Case: an unused edge hangs off an end of the path.
  for (EdgeId id : unused) {
    const Edge& e = g.edge(id);
    const bool at_last = e.u == last || e.v == last;
    const bool at_first = e.u == first || e.v == first;
    if (!at_last && !at_first) continue;
    out.which = StepCase::kExtendEnd;
    out.chosen = id;
    if (at_last) {
      const int z = e.u == last ? e.v : e.u;
      out.full.push_back(z);
      out.interior.push_back(last);
    } else {
      const int z = e.u == first ? e.v : e.u;
      out.full.insert(out.full.begin(), z);
      out.interior.insert(out.interior.begin(), first);
    }
    return out;
  }

  // Otherwise the lowest unused edge is disjoint from the final H edge and
  // must be joined to it by an edge of G.
  const EdgeId id = unused.front();
  const Edge& e = g.edge(id);
  const int penultimate = interior.back();
  out.chosen = id;
  for (int end : {e.u, e.v}) {
    if (g.adjacent(penultimate, end)) {
      const int other = end == e.u ? e.v : e.u;
      out.which = StepCase::kReplaceLast;
      out.interior.push_back(end);
      out.full = {first};
      out.full.insert(out.full.end(), out.interior.begin(),
                      out.interior.end());
      out.full.push_back(other);
      return out;
    }
  }
  for (int end : {e.u, e.v}) {
    if (g.adjacent(last, end)) {
      const int other = end == e.u ? e.v : e.u;
      out.which = StepCase::kAppendThrough;
      out.interior.push_back(last);
      out.interior.push_back(end);
      out.full.push_back(end);
      out.full.push_back(other);
      return out;
    }
  }
  throw Error(ErrorCode::kPrecondition,
              "H edges " + std::to_string(id.index) +
                  " and the final path edge are more than distance 2 apart");
}

HSidedPathResult find_h_sided_path(const Graph& g,
                                   const StrongCliqueWitness& h) {
  const int delta = max_degree(g);
  if (h.size() <= delta) {
    throw Error(ErrorCode::kPrecondition,
                "H-sided path construction needs e(H) > Delta");
  }
  const StrongCliqueCheck check = is_strong_clique(g, h.edge_ids);
  if (!check.ok) {
    throw Error(ErrorCode::kPrecondition, "H is not a strong clique");
  }

  std::vector<EdgeId> ids = h.edge_ids;
  std::sort(ids.begin(), ids.end());
  std::vector<int> full;
  // Two disjoint H edges and the edge of G joining them form the first path.
  for (std::size_t i = 0; i < ids.size() && full.empty(); ++i) {
    for (std::size_t j = i + 1; j < ids.size() && full.empty(); ++j) {
      const Edge a = g.edge(ids[i]);
      const Edge b = g.edge(ids[j]);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      for (const auto& [x1, y1] : {std::pair{a.u, a.v}, std::pair{a.v, a.u}}) {
        for (const auto& [x2, y2] :
             {std::pair{b.u, b.v}, std::pair{b.v, b.u}}) {
          if (full.empty() && g.adjacent(y1, x2)) full = {x1, y1, x2, y2};
        }
      }
    }
  }
  if (full.empty()) {
    // Pairwise incident edges, more of them than Delta: a triangle with
    // Delta = 2, whose two edges at one vertex already exhaust H.
    const Edge a = g.edge(ids[0]);
    const Edge b = g.edge(ids[1]);
    const int shared = (a.u == b.u || a.u == b.v) ? a.u : a.v;
    full = {a.u == shared ? a.v : a.u, shared, b.u == shared ? b.v : b.u};
  }

  HSidedPathResult result;
  std::vector<int> interior(full.begin() + 1, full.end() - 1);
  for (int guard = 0; guard <= g.order(); ++guard) {
    StepResult step = step_h_sided_path(g, h, interior, full);
    result.trace.push_back(step.which);
    if (step.which == StepCase::kTerminal) break;
    const std::size_t before = full.size();
    interior = std::move(step.interior);
    full = std::move(step.full);
    const std::size_t grown = full.size() - before;
    if (grown != 1 && grown != 2) {
      throw Error(ErrorCode::kInternal, "path grew by an unexpected amount");
    }
  }
  if (result.trace.empty() || result.trace.back() != StepCase::kTerminal) {
    throw Error(ErrorCode::kInternal, "path extension did not terminate");
  }

  result.path.vertices = full;
  result.path.h_edges = ids;
  validate_h_sided(g, result.path);

  // Recount independently: every H edge touches the interior or joins the two
  // ends, and there are at most (Delta - 1)|W| + 2 such edges.
  const VertexSet w = set_of(interior);
  int covered = 0;
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    const bool joins_ends =
        (e.u == full.front() && e.v == full.back()) ||
        (e.v == full.front() && e.u == full.back());
    if (((bit(e.u) | bit(e.v)) & w) != 0 || joins_ends) ++covered;
  }
  const int w_size = static_cast<int>(interior.size());
  if (covered != h.size() || (delta - 1) * w_size + 2 < h.size()) {
    throw Error(ErrorCode::kInternal, "H-sided path accounting failed");
  }
  result.required_order = (h.size() - 2 + delta - 2) / (delta - 1) + 2;
  if (result.path.order() < result.required_order) {
    throw Error(ErrorCode::kInternal, "H-sided path shorter than guaranteed");
  }
  return result;
}

}  // namespace sclab
