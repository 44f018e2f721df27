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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sclab/bounds.hpp"
#include "sclab/graph.hpp"
#include "sclab/strong_clique.hpp"

namespace sclab {

// ---------------------------------------------------------------------------
// Isomorphism classes

// Lexicographically least column-order adjacency string (the graph6 body
// layout) over all labelings that list colour-refinement cells in their
// canonical order. Equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

// The graph relabelled so its own graph6 body is canonical_form(g).
Graph canonical_graph(const Graph& g);

inline constexpr int kMaxEnumerationOrder = 8;

// One representative per isomorphism class of simple graphs on n vertices,
// sorted by canonical form. Built by extending every class on n - 1 vertices
// with a new vertex in all possible ways. Throws Error(kOutOfRange) for
// n < 1 or n > 8.
const std::vector<Graph>& enumerate_graphs(int n);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepOptions {
  int k_max = kDefaultKMax;
  bool include_chi = false;
  int chi_edge_budget = kDefaultChiEdgeBudget;
  int threads = 1;  // 0 selects the hardware concurrency
};

struct HPathSummary {
  int order = 0;
  int required = 0;
  int steps = 0;
  bool ok = false;
  std::string error;
};

struct ReductionSummary {
  int core_order = 0;
  bool bipartite = false;
  int core_omega2 = 0;
  bool ok = false;
};

struct GraphRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int delta = 0;
  std::optional<int> sigma;
  std::optional<int> girth;
  std::vector<int> cycle_lengths;  // profiled lengths that occur
  int longest_path = 0;            // order of a longest path (capped)
  bool bipartite = false;
  int omega2 = 0;
  std::vector<EdgeId> witness;
  std::optional<int> chi2;
  std::string chi_note;  // why chi_2' is absent when it was requested
  std::vector<BoundCheck> checks;
  std::optional<BoundCheck> lemma8;
  std::optional<HPathSummary> h_path;        // when omega_2' > Delta
  std::optional<ReductionSummary> reduction;  // when {C3,C5}-free
  std::string skipped;  // nonempty when the graph exceeded solver capacity

  // Proven bounds hold and both constructive procedures succeeded.
  bool sound() const;
};

GraphRecord analyze_graph(const Graph& g, const SweepOptions& options);

struct Tally {
  int applicable = 0;
  int holds = 0;
  int tight = 0;
  int violations = 0;
};

struct Violation {
  std::string graph6;
  BoundCheck check;
};

struct SweepReport {
  int graphs_processed = 0;
  int graphs_skipped = 0;
  // Keyed by "<spec>" or "<spec>[<param>=<value>]".
  std::map<std::string, Tally> tallies;
  std::vector<Violation> violations;  // proven and conjectured alike
  std::map<std::string, std::string> tight_examples;  // first graph6 per key
  std::vector<std::string> structural_failures;
  std::vector<GraphRecord> records;  // in input order

  // No proven bound violated and no constructive procedure failed.
  bool sound() const;
};

std::string tally_key(const BoundCheck& check);

// Analyses graphs across `options.threads` workers; the report and its record
// order depend only on the input order.
SweepReport sweep(std::span<const Graph> graphs, const SweepOptions& options);

// ---------------------------------------------------------------------------
// Counterexample hunting

struct HuntConfig {
  std::string target = "CONJ4";
  int k = 2;
  int n = 10;
  int delta_cap = 5;
  std::vector<int> forbidden;  // cycle lengths kept absent
  bool bipartite = false;
  std::uint64_t seed = 0;
  std::int64_t max_steps = 10000;  // moves per restart
  int restarts = 0;                // extra restarts, seeded seed + index
  int sideways_budget = 50;
  int threads = 1;
  std::optional<Graph> initial;    // start state of restart 0

  // Constraint defaults for a target: C_{2k} forbidden, plus bipartiteness
  // for CONJ5 and T13.
  static HuntConfig for_target(const std::string& target, int k, int n,
                               int delta_cap);
};

// Throws Error(kInvalidArgument) naming the first bad field.
void validate(const HuntConfig& config);

// True iff g respects the forbidden lengths, bipartiteness and degree cap.
bool satisfies_constraints(const Graph& g, const HuntConfig& config);

// The known extremal graph for CONJ4 (hairy clique of order 2k - 1) or CONJ5
// (K_{k-1,D} plus pendants) with the largest Delta that fits in n vertices
// under the degree cap, padded with isolated vertices to n. nullopt when no
// member fits.
std::optional<Graph> extremal_seed(const HuntConfig& config);

struct HuntResult {
  Graph best;
  bool applicable = false;
  int omega2 = 0;
  StrongCliqueWitness witness;
  int delta = 0;
  std::int64_t bound_value = 0;
  std::int64_t gap = 0;  // omega2 - bound_value
  int restart = 0;
  std::int64_t step = 0;  // step at which the best state was reached
  std::int64_t steps_taken = 0;
};

// Seeded hill climb over single edge toggles. Deterministic for a given
// config.
HuntResult hunt(const HuntConfig& config);

}  // namespace sclab
