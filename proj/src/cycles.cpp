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

#include "sclab/cycles.hpp"

#include <algorithm>
#include <string>

#include "sclab/error.hpp"

namespace sclab {
namespace {

// Vertices reachable from `from` using only vertices in `open`.
VertexSet reach_within(const Graph& g, int from, VertexSet open) {
  VertexSet seen = bit(from);
  VertexSet frontier = bit(from);
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet r = frontier; r != 0; r &= r - 1) {
      next |= g.neighbours(std::countr_zero(r));
    }
    next &= open & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Depth-first extension of a simple path. The cycle variant fixes the start as
// the smallest label on the cycle and requires path[1] < path.back(), so each
// cycle is met once per direction-free rotation.
class PathSearch {
 public:
  PathSearch(const Graph& g, int target) : g_(g), target_(target) {}

  bool cycle_from(int start) {
    start_ = start;
    allowed_ = all_vertices(g_.order()) & ~all_vertices(start);
    closing_ = true;
    return run();
  }

  bool path_from(int start) {
    start_ = start;
    allowed_ = all_vertices(g_.order());
    closing_ = false;
    return run();
  }

  const std::vector<int>& path() const { return path_; }

 private:
  bool run() {
    path_.assign(1, start_);
    used_ = bit(start_);
    return extend(start_);
  }

  bool extend(int cur) {
    const int len = static_cast<int>(path_.size());
    if (len == target_) {
      if (closing_) return g_.adjacent(cur, start_) && path_[1] < cur;
      return path_.front() < cur || target_ == 1;
    }
    const int remaining = target_ - len;
    const VertexSet open = allowed_ & ~used_;
    if (remaining > 1 && popcount(reach_within(g_, cur, open)) - 1 < remaining) {
      return false;
    }
    VertexSet cand = g_.neighbours(cur) & open;
    if (closing_ && remaining == 1) {
      cand &= g_.neighbours(start_);
      if (len >= 2) cand &= ~all_vertices(path_[1] + 1);
    }
    for (; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      path_.push_back(v);
      used_ |= bit(v);
      if (extend(v)) return true;
      used_ &= ~bit(v);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int target_;
  int start_ = 0;
  bool closing_ = false;
  VertexSet allowed_ = 0;
  VertexSet used_ = 0;
  std::vector<int> path_;
};

// Subset dynamic programme for long paths in graphs with at most 20 vertices:
// ends[mask] holds the vertices at which some path covering exactly `mask`
// can end.
std::optional<std::vector<int>> long_path_by_subsets(const Graph& g,
                                                     int order) {
  const int n = g.order();
  const std::uint32_t full = std::uint32_t{1} << n;
  std::vector<std::uint32_t> ends(full, 0);
  for (int v = 0; v < n; ++v) ends[std::uint32_t{1} << v] = 1U << v;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t here = ends[mask];
    if (here == 0) continue;
    const int size = std::popcount(mask);
    if (size == order) {
      std::vector<int> path;
      std::uint32_t m = mask;
      int v = std::countr_zero(here);
      path.push_back(v);
      while (std::popcount(m) > 1) {
        const std::uint32_t rest = m & ~(1U << v);
        const auto nb = static_cast<std::uint32_t>(g.neighbours(v));
        const std::uint32_t prev = ends[rest] & nb;
        v = std::countr_zero(prev);
        path.push_back(v);
        m = rest;
      }
      return path;
    }
    for (std::uint32_t r = here; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      for (auto out = static_cast<std::uint32_t>(g.neighbours(v)) & ~mask;
           out != 0; out &= out - 1) {
        const int w = std::countr_zero(out);
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return std::nullopt;
}

bool path_between(const Graph& g, int cur, int to, int remaining,
                  VertexSet used) {
  if (remaining == 1) return g.adjacent(cur, to);
  const VertexSet open = all_vertices(g.order()) & ~used & ~bit(to);
  if (popcount(reach_within(g, cur, open)) - 1 < remaining - 1) return false;
  if ((reach_within(g, cur, open | bit(to)) & bit(to)) == 0) return false;
  for (VertexSet cand = g.neighbours(cur) & open; cand != 0;
       cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    if (path_between(g, v, to, remaining - 1, used | bit(v))) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const Graph& g, int k) {
  if (k < 3 || k > g.order()) {
    throw Error(ErrorCode::kOutOfRange,
                "cycle length " + std::to_string(k) + " outside [3, " +
                    std::to_string(g.order()) + "]");
  }
  PathSearch search(g, k);
  for (int start = 0; start + k <= g.order(); ++start) {
    if (search.cycle_from(start)) return search.path();
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_path(const Graph& g, int order) {
  if (order < 2 || order > g.order()) {
    throw Error(ErrorCode::kOutOfRange,
                "path order " + std::to_string(order) + " outside [2, " +
                    std::to_string(g.order()) + "]");
  }
  if (order > 14 && g.order() <= 20) return long_path_by_subsets(g, order);
  PathSearch search(g, order);
  for (int start = 0; start < g.order(); ++start) {
    if (search.path_from(start)) return search.path();
  }
  return std::nullopt;
}

bool has_path_between(const Graph& g, int from, int to, int order) {
  if (order < 2 || from == to) return false;
  return path_between(g, from, to, order - 1, bit(from));
}

bool closes_cycle(const Graph& g, int u, int v, int k) {
  if (k < 3 || k > g.order()) return false;
  return has_path_between(g, u, v, k);
}

bool CycleProfile::has_cycle(int k) const {
  if (k < 3 || k > vertex_count) return false;
  if (k > max_len) {
    throw Error(ErrorCode::kOutOfRange,
                "cycle length " + std::to_string(k) + " not profiled");
  }
  return cycle_flags[k];
}

bool CycleProfile::has_path(int order) const {
  if (order <= 1) return vertex_count >= order;
  if (order > vertex_count) return false;
  if (order > max_len + 1) {
    throw Error(ErrorCode::kOutOfRange,
                "path order " + std::to_string(order) + " not profiled");
  }
  return path_flags[order];
}

CycleProfile cycle_profile(const Graph& g, int max_len) {
  CycleProfile p;
  p.vertex_count = g.order();
  p.max_len = std::clamp(max_len, 0, g.order());
  p.cycle_flags.assign(p.max_len + 1, false);
  p.path_flags.assign(p.max_len + 2, false);
  for (int k = 3; k <= p.max_len; ++k) {
    p.cycle_flags[k] = contains_cycle(g, k);
    if (p.cycle_flags[k] && !p.girth) p.girth = k;
  }
  // Path existence is monotone in the order: stop at the first miss.
  for (int order = 2; order <= std::min(p.max_len + 1, g.order()); ++order) {
    if (!contains_path(g, order)) break;
    p.path_flags[order] = true;
  }
  if (!p.girth) {
    // Shortest cycles longer than max_len still define the girth.
    for (int k = p.max_len + 1; k <= g.order(); ++k) {
      if (contains_cycle(g, k)) {
        p.girth = k;
        break;
      }
    }
  }
  return p;
}

BranchingReport branching_edges(const Graph& g, VertexSet s, int b) {
  BranchingReport report;
  report.base_set = s;
  report.threshold = b;
  const auto edges = g.edges();
  for (int i = 0; i < g.size(); ++i) {
    const bool u_in = (s >> edges[i].u) & 1U;
    const bool v_in = (s >> edges[i].v) & 1U;
    if (u_in == v_in) continue;
    const int outside = u_in ? edges[i].v : edges[i].u;
    if (popcount(g.neighbours(outside) & s) >= b) {
      report.branching_edges.push_back(EdgeId{i});
    }
  }
  return report;
}

Graph cross_subgraph(const Graph& g, VertexSet s) {
  const VertexSet all = all_vertices(g.order());
  s &= all;
  std::vector<VertexSet> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = g.neighbours(v) & (((s >> v) & 1U) ? (all & ~s) : s);
  }
  return Graph::from_rows(rows);
}

KsatCheck check_ksat(const Graph& g, VertexSet x, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "ksat needs k >= 2");
  KsatCheck out;
  const Graph cross = cross_subgraph(g, x);
  const int order = 2 * k + 1;
  out.applicable = order > cross.order() || !contains_path(cross, order);
  out.branching_count = branching_edges(g, x, k).count();
  out.bound = std::int64_t{k} * k * popcount(x & all_vertices(g.order()));
  out.holds = !out.applicable || out.branching_count <= out.bound;
  return out;
}

ErdosGallaiCheck check_erdos_gallai(const Graph& g, int ell) {
  if (ell < 2) {
    throw Error(ErrorCode::kInvalidArgument, "Erdos-Gallai needs ell >= 2");
  }
  ErdosGallaiCheck out;
  const int order = ell + 1;
  out.applicable = order > g.order() || !contains_path(g, order);
  out.edges = g.size();
  out.bound = Fraction{std::int64_t{ell - 1} * g.order(), 2};
  out.holds = !out.applicable || out.bound.at_least(out.edges);
  return out;
}

}  // namespace sclab
