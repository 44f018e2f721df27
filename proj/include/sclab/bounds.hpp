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
#include <string>
#include <string_view>
#include <vector>

#include "sclab/cycles.hpp"
#include "sclab/fraction.hpp"
#include "sclab/graph.hpp"
#include "sclab/strong_clique.hpp"

namespace sclab {

inline constexpr int kDefaultKMax = 5;

// Which quantity a bound constrains.
enum class BoundTarget { kOmega2, kChi2 };

// The free integer parameter of a parametrised bound.
enum class ParamKind { kNone, kK, kKappa, kEll };

std::string_view param_name(ParamKind p);

// Everything the hypotheses and formulas read from a graph, computed once.
struct GraphFacts {
  int order = 0;
  int edges = 0;
  int delta = 0;
  std::optional<int> sigma;
  bool bipartite = true;
  CycleProfile profile;

  // Profiles cycles up to length 2 * k_max + 2, the longest any registry
  // hypothesis asks about.
  static GraphFacts of(const Graph& g, int k_max = kDefaultKMax);
};

struct BoundSpec {
  std::string_view id;
  std::string_view hypothesis;
  std::string_view formula;
  std::string_view source;
  bool conjecture = false;
  BoundTarget target = BoundTarget::kOmega2;
  ParamKind param = ParamKind::kNone;
  int param_min = 0;
  // Largest parameter for a given k_max (ignored when param is kNone).
  int (*param_max)(int k_max) = nullptr;
  // Hypothesis test; callers guarantee the graph has at least one edge.
  bool (*applies)(const GraphFacts& facts, int p) = nullptr;
  // Bound value as a function of Delta, sigma and the parameter.
  Fraction (*value)(int delta, int sigma, int p) = nullptr;
};

const std::vector<BoundSpec>& theorem_registry();

// Throws Error(kInvalidArgument) for an unknown id.
const BoundSpec& find_bound(std::string_view id);

// Parameter instantiations for k_max; {0} when the spec has no parameter.
std::vector<int> parameter_values(const BoundSpec& spec, int k_max);

struct Instantiation {
  const BoundSpec* spec = nullptr;
  int param = 0;
};

// Every (spec, parameter) whose hypothesis the graph satisfies.
std::vector<Instantiation> applicable_bounds(const GraphFacts& facts,
                                             int k_max = kDefaultKMax);
std::vector<Instantiation> applicable_bounds(const Graph& g,
                                             int k_max = kDefaultKMax);

struct BoundCheck {
  std::string spec_id;
  ParamKind param_kind = ParamKind::kNone;
  int param = 0;
  bool conjecture = false;
  BoundTarget target = BoundTarget::kOmega2;
  bool applicable = false;
  int measured = 0;          // omega_2' or chi_2' according to target
  Fraction bound;            // exact value
  std::int64_t bound_value = 0;  // floor of `bound`
  bool holds = true;         // !applicable || measured <= bound
  bool tight = false;        // applicable && measured == bound_value
};

// `measured` must be the exact value of the spec's target quantity.
BoundCheck check_bound(const GraphFacts& facts, const BoundSpec& spec,
                       int param, int measured);
BoundCheck check_bound(const Graph& g, const BoundSpec& spec, int param,
                       int measured);

// Checks every registry instantiation. Entries targeting chi_2' are skipped
// when chi2 is absent.
std::vector<BoundCheck> check_all(const GraphFacts& facts, int omega2,
                                  std::optional<int> chi2,
                                  int k_max = kDefaultKMax);

// Refined C5-free form e(H) <= Delta_H (sigma_G(H) - Delta_H), evaluated on a
// strong clique H of g. Reported with spec_id "L8".
BoundCheck check_lemma8(const Graph& g, const GraphFacts& facts,
                        const StrongCliqueWitness& h);

}  // namespace sclab
