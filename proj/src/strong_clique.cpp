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

#include "sclab/strong_clique.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "sclab/error.hpp"
#include "sclab/random.hpp"

namespace sclab {
namespace {

// Branch and bound with greedy-colouring bounds (MCQ style). Vertices are
// relabelled by non-increasing degree so low bit positions are the likely
// clique members; colour classes are built in bit order and branching runs
// from the highest colour down.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::span<const VertexSet> rows) {
    n_ = static_cast<int>(rows.size());
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return popcount(rows[a]) > popcount(rows[b]);
    });
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[order_[i]] = i;
    adj_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (VertexSet r = rows[order_[i]]; r != 0; r &= r - 1) {
        adj_[i] |= bit(position[std::countr_zero(r)]);
      }
    }
  }

  Clique solve() {
    if (n_ > 0) {
      best_size_ = 1;
      best_set_ = bit(0);
      expand(all_vertices(n_), 0, 0);
    }
    Clique out;
    out.size = best_size_;
    for (VertexSet r = best_set_; r != 0; r &= r - 1) {
      out.vertices.push_back(order_[std::countr_zero(r)]);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }

 private:
  void expand(VertexSet cand, VertexSet current, int size) {
    std::array<int, 64> vertex{};
    std::array<int, 64> colour{};
    int count = 0;
    int c = 0;
    for (VertexSet uncoloured = cand; uncoloured != 0;) {
      ++c;
      VertexSet q = uncoloured;
      while (q != 0) {
        const int v = std::countr_zero(q);
        q &= ~adj_[v] & ~bit(v);
        uncoloured &= ~bit(v);
        vertex[count] = v;
        colour[count] = c;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + colour[i] <= best_size_) return;
      const int v = vertex[i];
      const VertexSet next = cand & adj_[v];
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_set_ = current | bit(v);
        }
      } else {
        expand(next, current | bit(v), size + 1);
      }
      cand &= ~bit(v);
    }
  }

  int n_ = 0;
  std::vector<int> order_;
  std::vector<VertexSet> adj_;
  int best_size_ = 0;
  VertexSet best_set_ = 0;
};

// Exact k-colourability by DSATUR-ordered backtracking with the colours of one
// maximum clique fixed up front.
class ColoringSearch {
 public:
  static constexpr std::int64_t kNodeLimit = 20'000'000;

  ColoringSearch(std::span<const VertexSet> rows, const Clique& clique)
      : rows_(rows), clique_(clique), n_(static_cast<int>(rows.size())) {}

  bool try_colors(int k, std::vector<int>& result) {
    colour_.assign(n_, -1);
    forbidden_.assign(n_, 0);
    int used = 0;
    for (int v : clique_.vertices) assign(v, used++);
    k_ = k;
    if (!search(n_ - clique_.size, used)) return false;
    result = colour_;
    return true;
  }

 private:
  void assign(int v, int c) {
    colour_[v] = c;
    for (VertexSet r = rows_[v]; r != 0; r &= r - 1) {
      forbidden_[std::countr_zero(r)] |= std::uint64_t{1} << c;
    }
  }

  // Recomputes the forbidden masks; cheaper than undo bookkeeping at <= 64
  // vertices.
  void unassign(int v) {
    colour_[v] = -1;
    for (VertexSet r = rows_[v]; r != 0; r &= r - 1) {
      const int w = std::countr_zero(r);
      std::uint64_t mask = 0;
      for (VertexSet s = rows_[w]; s != 0; s &= s - 1) {
        const int c = colour_[std::countr_zero(s)];
        if (c >= 0) mask |= std::uint64_t{1} << c;
      }
      forbidden_[w] = mask;
    }
  }

  bool search(int remaining, int used) {
    if (remaining == 0) return true;
    if (++nodes_ > kNodeLimit) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "strong chromatic index search exceeded its node limit");
    }
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = std::popcount(forbidden_[v]);
      int deg = 0;
      for (VertexSet r = rows_[v]; r != 0; r &= r - 1) {
        if (colour_[std::countr_zero(r)] < 0) ++deg;
      }
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    // Fresh colours are interchangeable: only the first unused one is tried.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden_[pick] >> c) & 1U) continue;
      assign(pick, c);
      if (search(remaining - 1, std::max(used, c + 1))) return true;
      unassign(pick);
    }
    return false;
  }

  std::span<const VertexSet> rows_;
  const Clique& clique_;
  int n_;
  int k_ = 0;
  std::int64_t nodes_ = 0;
  std::vector<int> colour_;
  std::vector<std::uint64_t> forbidden_;
};

std::vector<int> dsatur_greedy(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> colour(n, -1);
  std::vector<std::uint64_t> forbidden(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      const int sat = std::popcount(forbidden[v]);
      if (pick < 0 || sat > pick_sat ||
          (sat == pick_sat && popcount(rows[v]) > popcount(rows[pick]))) {
        pick = v;
        pick_sat = sat;
      }
    }
    const int c = std::countr_zero(~forbidden[pick]);
    colour[pick] = c;
    for (VertexSet r = rows[pick]; r != 0; r &= r - 1) {
      forbidden[std::countr_zero(r)] |= std::uint64_t{1} << c;
    }
  }
  return colour;
}

bool edges_compatible(const Graph& g, const Edge& a, const Edge& b) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
  return g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) ||
         g.adjacent(a.v, b.u) || g.adjacent(a.v, b.v);
}

void brute_force_extend(const Graph& g, int next, std::vector<int>& chosen,
                        int& best) {
  const auto edges = g.edges();
  if (next == g.size()) {
    best = std::max(best, static_cast<int>(chosen.size()));
    return;
  }
  bool fits = true;
  for (int c : chosen) {
    if (!edges_compatible(g, edges[c], edges[next])) {
      fits = false;
      break;
    }
  }
  if (fits) {
    chosen.push_back(next);
    brute_force_extend(g, next + 1, chosen, best);
    chosen.pop_back();
  }
  brute_force_extend(g, next + 1, chosen, best);
}

}  // namespace

std::vector<VertexSet> strong_compatibility(const Graph& g) {
  const Graph sq = square(line_graph(g));
  return {sq.rows().begin(), sq.rows().end()};
}

StrongCliqueCheck is_strong_clique(const Graph& g,
                                   std::span<const EdgeId> f) {
  for (EdgeId id : f) {
    if (!g.valid(id)) {
      throw Error(ErrorCode::kOutOfRange,
                  "unknown EdgeId " + std::to_string(id.index));
    }
  }
  StrongCliqueCheck out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] == f[j]) continue;
      if (!edges_compatible(g, g.edge(f[i]), g.edge(f[j]))) {
        out.ok = false;
        out.violation = std::make_pair(f[i], f[j]);
        return out;
      }
    }
  }
  return out;
}

Clique max_clique(std::span<const VertexSet> rows) {
  if (rows.size() > kMaxVertices) {
    throw Error(ErrorCode::kCapacity, "clique search limited to 64 vertices");
  }
  return CliqueSearch(rows).solve();
}

StrongCliqueResult strong_clique_number(const Graph& g) {
  const std::vector<VertexSet> compat = strong_compatibility(g);
  const Clique clique = max_clique(compat);
  StrongCliqueResult out;
  out.value = clique.size;
  for (int v : clique.vertices) out.witness.edge_ids.push_back(EdgeId{v});
  return out;
}

int strong_clique_number_bruteforce(const Graph& g) {
  if (g.size() > 20) {
    throw Error(ErrorCode::kCapacity,
                "brute-force oracle limited to 20 edges, got " +
                    std::to_string(g.size()));
  }
  std::vector<int> chosen;
  int best = 0;
  brute_force_extend(g, 0, chosen, best);
  return best;
}

StrongChromaticResult strong_chromatic_index(const Graph& g,
                                             int edge_budget) {
  if (g.size() > edge_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "strong chromatic index limited to " +
                    std::to_string(edge_budget) + " edges, got " +
                    std::to_string(g.size()));
  }
  StrongChromaticResult out;
  if (g.size() == 0) return out;
  const std::vector<VertexSet> compat = strong_compatibility(g);
  const Clique clique = max_clique(compat);
  std::vector<int> best = dsatur_greedy(compat);
  int best_count = *std::max_element(best.begin(), best.end()) + 1;
  ColoringSearch search(compat, clique);
  for (int k = clique.size; k < best_count; ++k) {
    std::vector<int> found;
    if (search.try_colors(k, found)) {
      best = std::move(found);
      best_count = k;
      break;
    }
  }
  out.value = best_count;
  out.coloring.color_of = std::move(best);
  out.coloring.color_count = best_count;
  return out;
}

bool is_strong_coloring(const Graph& g, const StrongColoring& coloring) {
  if (static_cast<int>(coloring.color_of.size()) != g.size()) return false;
  for (int c : coloring.color_of) {
    if (c < 0 || c >= coloring.color_count) return false;
  }
  const auto edges = g.edges();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (coloring.color_of[i] == coloring.color_of[j] &&
          edges_compatible(g, edges[i], edges[j])) {
        return false;
      }
    }
  }
  return true;
}

StrongCliqueWitness greedy_strong_clique(const Graph& g, std::uint64_t seed) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span<int>(order));
  const auto edges = g.edges();
  StrongCliqueWitness out;
  for (int i : order) {
    bool fits = true;
    for (EdgeId kept : out.edge_ids) {
      if (!edges_compatible(g, edges[i], edges[kept.index])) {
        fits = false;
        break;
      }
    }
    if (fits) out.edge_ids.push_back(EdgeId{i});
  }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

}  // namespace sclab
