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

#include <map>
#include <string>
#include <string_view>

#include "sclab/graph.hpp"

namespace sclab {

enum class Family { kBlownUpC5, kHairyClique, kCompleteBipartite, kBipPendant };

std::string_view family_name(Family f);

struct ConstructionSpec {
  Family family = Family::kBlownUpC5;
  std::map<std::string, int> parameters;
  int expected_strong_clique = 0;
  int expected_max_degree = 0;
};

struct Construction {
  Graph graph;
  ConstructionSpec spec;
};

// Each generator lays out vertices with the structured part first (classes or
// clique or bipartition sides, in order) and pendant vertices last.

// C5 with every vertex replaced by a stable set of size t; Delta = 2t and
// every one of the 5t^2 edges lies in one strong clique.
Construction blown_up_c5(int t);

// K_q with delta - q + 1 pendant edges on each clique vertex. For q = 2k - 1
// the strong clique number is (2k - 1)(delta - k + 1).
Construction hairy_clique(int q, int delta);

// K_{a,b}; all a*b edges form one strong clique.
Construction complete_bipartite(int a, int b);

// K_{k-1,delta} with delta - k + 1 pendants on one vertex of the delta side.
// Strong clique number k(delta - 1) + 1.
Construction bip_pendant_construction(int k, int delta);

// Dispatch by family name ("blown_up_c5", "hairy_clique",
// "complete_bipartite", "bip_pendant") and named integer parameters.
Construction construct(std::string_view family,
                       const std::map<std::string, int>& params);

}  // namespace sclab
