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

#include "sclab/constructions.hpp"

#include <algorithm>
#include <vector>

#include "sclab/error.hpp"

namespace sclab {
namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

void require_fits(int vertices, const char* family) {
  require(vertices <= kMaxVertices, ErrorCode::kCapacity,
          std::string(family) + " needs " + std::to_string(vertices) +
              " vertices; capacity is 64");
}

int param(const std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::kInvalidArgument, "missing parameter " + key);
  }
  return it->second;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kBlownUpC5:
      return "blown_up_c5";
    case Family::kHairyClique:
      return "hairy_clique";
    case Family::kCompleteBipartite:
      return "complete_bipartite";
    case Family::kBipPendant:
      return "bip_pendant";
  }
  return "unknown";
}

Construction blown_up_c5(int t) {
  require(t >= 1, ErrorCode::kInvalidArgument, "blown_up_c5 needs t >= 1");
  require_fits(5 * t, "blown_up_c5");
  std::vector<Edge> edges;
  for (int cls = 0; cls < 5; ++cls) {
    const int next = (cls + 1) % 5;
    for (int a = 0; a < t; ++a) {
      for (int b = 0; b < t; ++b) edges.push_back({cls * t + a, next * t + b});
    }
  }
  Construction out{Graph::build(5 * t, edges), {}};
  out.spec.family = Family::kBlownUpC5;
  out.spec.parameters = {{"t", t}};
  out.spec.expected_strong_clique = 5 * t * t;
  out.spec.expected_max_degree = 2 * t;
  return out;
}

Construction hairy_clique(int q, int delta) {
  require(q >= 3, ErrorCode::kInvalidArgument, "hairy_clique needs q >= 3");
  require(delta >= q - 1, ErrorCode::kInvalidArgument,
          "hairy_clique needs delta >= q - 1");
  const int hairs = delta - q + 1;
  require_fits(q + q * hairs, "hairy_clique");
  std::vector<Edge> edges;
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) edges.push_back({a, b});
  }
  int next = q;
  for (int a = 0; a < q; ++a) {
    for (int h = 0; h < hairs; ++h) edges.push_back({a, next++});
  }
  Construction out{Graph::build(next, edges), {}};
  out.spec.family = Family::kHairyClique;
  out.spec.parameters = {{"q", q}, {"delta", delta}};
  if (q % 2 == 1) out.spec.parameters["k"] = (q + 1) / 2;
  out.spec.expected_strong_clique = q * hairs + q * (q - 1) / 2;
  out.spec.expected_max_degree = delta;
  return out;
}

Construction complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, ErrorCode::kInvalidArgument,
          "complete_bipartite needs a, b >= 1");
  require_fits(a + b, "complete_bipartite");
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) edges.push_back({x, a + y});
  }
  Construction out{Graph::build(a + b, edges), {}};
  out.spec.family = Family::kCompleteBipartite;
  out.spec.parameters = {{"a", a}, {"b", b}};
  out.spec.expected_strong_clique = a * b;
  out.spec.expected_max_degree = std::max(a, b);
  return out;
}

Construction bip_pendant_construction(int k, int delta) {
  require(k >= 2, ErrorCode::kInvalidArgument, "bip_pendant needs k >= 2");
  require(delta >= k - 1, ErrorCode::kInvalidArgument,
          "bip_pendant needs delta >= k - 1");
  const int small = k - 1;
  const int pendants = delta - k + 1;
  require_fits(small + delta + pendants, "bip_pendant");
  std::vector<Edge> edges;
  for (int x = 0; x < small; ++x) {
    for (int y = 0; y < delta; ++y) edges.push_back({x, small + y});
  }
  // Pendants hang off the first vertex of the delta side.
  const int anchor = small;
  for (int p = 0; p < pendants; ++p) {
    edges.push_back({anchor, small + delta + p});
  }
  Construction out{Graph::build(small + delta + pendants, edges), {}};
  out.spec.family = Family::kBipPendant;
  out.spec.parameters = {{"k", k}, {"delta", delta}};
  out.spec.expected_strong_clique = k * (delta - 1) + 1;
  out.spec.expected_max_degree = delta;
  return out;
}

Construction construct(std::string_view family,
                       const std::map<std::string, int>& params) {
  if (family == "blown_up_c5") return blown_up_c5(param(params, "t"));
  if (family == "hairy_clique") {
    return hairy_clique(param(params, "q"), param(params, "delta"));
  }
  if (family == "complete_bipartite") {
    return complete_bipartite(param(params, "a"), param(params, "b"));
  }
  if (family == "bip_pendant") {
    return bip_pendant_construction(param(params, "k"), param(params, "delta"));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown construction family " + std::string(family));
}

}  // namespace sclab
