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

#include "sclab/graph.hpp"
#include "sclab/strong_clique.hpp"

namespace sclab {

// Constructive procedures over a maximum strong clique H.

struct ReductionResult {
  Graph core;
  std::vector<int> vertex_map;  // core vertex i is vertex_map[i] in g
  Edge anchor;                  // the chosen edge uv of H, original labels
};

// Induced subgraph on every vertex within distance two of the anchor edge
// (the lowest EdgeId of the witness). For a {C3,C5}-free g and a maximum
// witness the core is bipartite with the same strong clique number; the
// caller is responsible for both preconditions. Throws Error(kPrecondition)
// for an empty witness.
ReductionResult bipartite_reduction(const Graph& g,
                                    const StrongCliqueWitness& witness);

// A path whose first and last edges belong to H.
struct HSidedPath {
  std::vector<int> vertices;
  std::vector<EdgeId> h_edges;
  int order() const { return static_cast<int>(vertices.size()); }
};

// Throws Error(kInternal) naming the first broken condition: consecutive
// vertices adjacent, vertices distinct, both end edges in H.
void validate_h_sided(const Graph& g, const HSidedPath& path);

enum class StepCase {
  kExtendEnd,       // an unused H edge hangs off the first or last vertex
  kReplaceLast,     // an unused H edge attaches to the second-to-last vertex
  kAppendThrough,   // an unused H edge attaches to the last vertex via G
  kTerminal,        // no unused H edges remain
};

struct StepResult {
  StepCase which = StepCase::kTerminal;
  // Interior W and full path W* after the step; unchanged when terminal.
  std::vector<int> interior;
  std::vector<int> full;
  std::optional<EdgeId> chosen;  // the H edge that drove the step
};

// One iteration of the extension. `full` must equal first + interior + last,
// with first and last edges in H. The unused set is
// H \ (edges touching the interior, plus the edge joining the two ends).
// Throws Error(kPrecondition) on an inconsistent state.
StepResult step_h_sided_path(const Graph& g, const StrongCliqueWitness& h,
                             const std::vector<int>& interior,
                             const std::vector<int>& full);

struct HSidedPathResult {
  HSidedPath path;
  std::vector<StepCase> trace;
  int required_order = 0;  // ceil((e(H) - 2) / (Delta - 1)) + 2
};

// Starts from an H-sided path on four vertices (three when H is a triangle in
// a graph of maximum degree 2) and applies step_h_sided_path until no unused
// H edge remains. Requires e(H) > Delta and H a strong clique; throws
// Error(kPrecondition) otherwise and Error(kInternal) if the final path fails
// its own validity or length accounting.
HSidedPathResult find_h_sided_path(const Graph& g,
                                   const StrongCliqueWitness& h);

}  // namespace sclab
