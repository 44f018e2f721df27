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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sclab/graph.hpp"

namespace sclab {

// A set of edges that pairwise share an endpoint or are joined by an edge.
struct StrongCliqueWitness {
  std::vector<EdgeId> edge_ids;  // ascending
  int size() const { return static_cast<int>(edge_ids.size()); }
};

// Partition of E(G) into induced matchings. color_of[i] colours EdgeId{i}.
struct StrongColoring {
  std::vector<int> color_of;
  int color_count = 0;
};

// Adjacency of L(G)^2: row i has bit j set iff edges i and j are distinct and
// at distance at most two in L(G). Throws Error(kCapacity) for more than 64
// edges.
std::vector<VertexSet> strong_compatibility(const Graph& g);

struct StrongCliqueCheck {
  bool ok = true;
  std::optional<std::pair<EdgeId, EdgeId>> violation;  // first failing pair
};

// Throws Error(kOutOfRange) on an unknown EdgeId.
StrongCliqueCheck is_strong_clique(const Graph& g, std::span<const EdgeId> f);

struct Clique {
  int size = 0;
  std::vector<int> vertices;  // ascending
};

// Exact maximum clique of the graph given by adjacency rows.
Clique max_clique(std::span<const VertexSet> rows);
inline Clique max_clique(const Graph& h) { return max_clique(h.rows()); }

struct StrongCliqueResult {
  int value = 0;
  StrongCliqueWitness witness;
};

// omega_2'(g) = omega(L(g)^2) with a maximum witness.
StrongCliqueResult strong_clique_number(const Graph& g);

// Exhaustive search over edge subsets using only the pairwise definition.
// Throws Error(kCapacity) when g has more than 20 edges.
int strong_clique_number_bruteforce(const Graph& g);

struct StrongChromaticResult {
  int value = 0;
  StrongColoring coloring;
};

inline constexpr int kDefaultChiEdgeBudget = 24;

// chi_2'(g) = chi(L(g)^2) with a certificate. Throws Error(kBudgetExceeded)
// when g has more than `edge_budget` edges or the search exceeds its node
// limit.
StrongChromaticResult strong_chromatic_index(
    const Graph& g, int edge_budget = kDefaultChiEdgeBudget);

// True iff every colour class is an induced matching.
bool is_strong_coloring(const Graph& g, const StrongColoring& coloring);

// One pass over a seeded random edge order, keeping each edge compatible
// with everything kept so far.
StrongCliqueWitness greedy_strong_clique(const Graph& g, std::uint64_t seed);

}  // namespace sclab
