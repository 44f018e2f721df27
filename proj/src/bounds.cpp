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

#include "sclab/bounds.hpp"

#include <algorithm>

#include "sclab/error.hpp"

namespace sclab {
namespace {

using I = std::int64_t;

bool free_of(const GraphFacts& f, int k) { return !f.profile.has_cycle(k); }

int k_max_identity(int k_max) { return k_max; }
int odd_up_to(int k_max) { return 2 * k_max + 1; }

std::vector<BoundSpec> make_registry() {
  std::vector<BoundSpec> r;
  r.push_back({"T2.1", "triangle-free", "5/4 D^2",
               "if G is triangle-free", false, BoundTarget::kOmega2,
               ParamKind::kNone, 0, nullptr,
               [](const GraphFacts& f, int) { return free_of(f, 3); },
               [](int d, int, int) { return Fraction{I{5} * d * d, 4}; }});
  r.push_back({"T2.2", "C5-free", "D^2", "if G is C5-free", false,
               BoundTarget::kOmega2, ParamKind::kNone, 0, nullptr,
               [](const GraphFacts& f, int) { return free_of(f, 5); },
               [](int d, int, int) { return Fraction::whole(I{d} * d); }});
  r.push_back({"T2.3", "C_{2k+1}-free, k >= 3, D >= 3k^2 + 10k", "D^2",
               "provided D >= 3k^2 + 10k", false,
               BoundTarget::kOmega2, ParamKind::kK, 3, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return free_of(f, 2 * k + 1) && f.delta >= 3 * k * k + 10 * k;
               },
               [](int d, int, int) { return Fraction::whole(I{d} * d); }});
  r.push_back({"T3.1", "C4-free, D >= 4", "3(D-1)",
               "provided D >= 4", false, BoundTarget::kOmega2,
               ParamKind::kNone, 0, nullptr,
               [](const GraphFacts& f, int) {
                 return free_of(f, 4) && f.delta >= 4;
               },
               [](int d, int, int) { return Fraction::whole(I{3} * (d - 1)); }});
  // The statement carries no degree threshold, but the bound is 0 at D = 1
  // while a single edge has omega_2' = 1; the proof assumes D >= 2.
  r.push_back({"T3.2", "C_{2k}-free, k >= 3, D >= 2", "10k^2(D-1)",
               "if G is C_{2k}-free, k >= 3", false,
               BoundTarget::kOmega2, ParamKind::kK, 3, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return free_of(f, 2 * k) && f.delta >= 2;
               },
               [](int d, int, int k) {
                 return Fraction::whole(I{10} * k * k * (d - 1));
               }});
  r.push_back({"T3.3", "{C_{2k},C_{2k+1},C_{2k+2}}-free, k >= 2",
               "(2k-1)(D-1)+2", "{C_{2k},C_{2k+1},C_{2k+2}}-free",
               false, BoundTarget::kOmega2, ParamKind::kK, 2, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return free_of(f, 2 * k) && free_of(f, 2 * k + 1) &&
                        free_of(f, 2 * k + 2);
               },
               [](int d, int, int k) {
                 return Fraction::whole(I{2 * k - 1} * (d - 1) + 2);
               }});
  r.push_back({"T5.1", "P_{kappa+1}-free, kappa >= 3", "(kappa-2)(D-1)+2",
               "if G is P_{kappa+1}-free", false,
               BoundTarget::kOmega2, ParamKind::kKappa, 3, odd_up_to,
               [](const GraphFacts& f, int kappa) {
                 return !f.profile.has_path(kappa + 1);
               },
               [](int d, int, int kappa) {
                 return Fraction::whole(I{kappa - 2} * (d - 1) + 2);
               }});
  r.push_back({"T5.2", "{C_{l-1},C_l,C_{l+1}}-free, l >= 5", "(l-2)(D-1)+2",
               "{C_{l-1},C_l,C_{l+1}}-free", false,
               BoundTarget::kOmega2, ParamKind::kEll, 5, odd_up_to,
               [](const GraphFacts& f, int ell) {
                 return free_of(f, ell - 1) && free_of(f, ell) &&
                        free_of(f, ell + 1);
               },
               [](int d, int, int ell) {
                 return Fraction::whole(I{ell - 2} * (d - 1) + 2);
               }});
  r.push_back({"T7", "C5-free", "sigma^2/4",
               "omega_2'(G) <= sigma_G^2 / 4", false,
               BoundTarget::kOmega2, ParamKind::kNone, 0, nullptr,
               [](const GraphFacts& f, int) {
                 return free_of(f, 5) && f.sigma.has_value();
               },
               [](int, int s, int) { return Fraction{I{s} * s, 4}; }});
  r.push_back({"T9", "{C3,C5,C_{2k},C_{2k+2}}-free", "max{kD, 2k(k-1)}",
               "{C3,C5,C_{2k},C_{2k+2}}-free graph", false,
               BoundTarget::kOmega2, ParamKind::kK, 2, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return free_of(f, 3) && free_of(f, 5) && free_of(f, 2 * k) &&
                        free_of(f, 2 * k + 2);
               },
               [](int d, int, int k) {
                 return Fraction::whole(std::max(I{k} * d, I{2} * k * (k - 1)));
               }});
  r.push_back({"T13", "bipartite, {C_{2k},C_{2k+2}}-free", "max{kD, 2k(k-1)}",
               "{C_{2k},C_{2k+2}}-free bipartite graph", false,
               BoundTarget::kOmega2, ParamKind::kK, 2, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return f.bipartite && free_of(f, 2 * k) &&
                        free_of(f, 2 * k + 2);
               },
               [](int d, int, int k) {
                 return Fraction::whole(std::max(I{k} * d, I{2} * k * (k - 1)));
               }});
  r.push_back({"CONJ1", "any graph (chi_2')", "5/4 D^2",
               "chi_2'(G) <= 5/4 D^2", true, BoundTarget::kChi2,
               ParamKind::kNone, 0, nullptr,
               [](const GraphFacts&, int) { return true; },
               [](int d, int, int) { return Fraction{I{5} * d * d, 4}; }});
  r.push_back({"CONJ3", "C5-free (chi_2')", "D^2",
               "for a C5-free graph", true, BoundTarget::kChi2,
               ParamKind::kNone, 0, nullptr,
               [](const GraphFacts& f, int) { return free_of(f, 5); },
               [](int d, int, int) { return Fraction::whole(I{d} * d); }});
  // Without a degree floor the statement fails trivially (C5 at D = 2 for
  // k = 2); the floor is the sharpness range D >= 2k - 2, raised to the
  // D >= 4 of the proven k = 2 case.
  r.push_back({"CONJ4", "C_{2k}-free, k >= 2, D >= max(2k-2, 4)",
               "(2k-1)(D-k+1)",
               "omega_2'(G) <= (2k-1)(D-k+1)", true,
               BoundTarget::kOmega2, ParamKind::kK, 2, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return free_of(f, 2 * k) && f.delta >= std::max(2 * k - 2, 4);
               },
               [](int d, int, int k) {
                 return Fraction::whole(I{2 * k - 1} * (d - k + 1));
               }});
  r.push_back({"CONJ5", "bipartite, C_{2k}-free, k >= 2", "k(D-1)+1",
               "omega_2'(G) <= k(D-1)+1", true,
               BoundTarget::kOmega2, ParamKind::kK, 2, k_max_identity,
               [](const GraphFacts& f, int k) {
                 return f.bipartite && free_of(f, 2 * k);
               },
               [](int d, int, int k) {
                 return Fraction::whole(I{k} * (d - 1) + 1);
               }});
  return r;
}

}  // namespace

std::string_view param_name(ParamKind p) {
  switch (p) {
    case ParamKind::kNone:
      return "";
    case ParamKind::kK:
      return "k";
    case ParamKind::kKappa:
      return "kappa";
    case ParamKind::kEll:
      return "ell";
  }
  return "";
}

GraphFacts GraphFacts::of(const Graph& g, int k_max) {
  GraphFacts f;
  f.order = g.order();
  f.edges = g.size();
  f.delta = max_degree(g);
  f.sigma = ore_degree(g);
  f.bipartite = is_bipartite(g);
  f.profile = cycle_profile(g, 2 * k_max + 2);
  return f;
}

const std::vector<BoundSpec>& theorem_registry() {
  static const std::vector<BoundSpec> registry = make_registry();
  return registry;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const BoundSpec& s : theorem_registry()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown bound id " + std::string(id));
}

std::vector<int> parameter_values(const BoundSpec& spec, int k_max) {
  if (spec.param == ParamKind::kNone) return {0};
  std::vector<int> out;
  for (int p = spec.param_min; p <= spec.param_max(k_max); ++p) {
    out.push_back(p);
  }
  return out;
}

BoundCheck check_bound(const GraphFacts& facts, const BoundSpec& spec,
                       int param, int measured) {
  BoundCheck c;
  c.spec_id = std::string(spec.id);
  c.param_kind = spec.param;
  c.param = param;
  c.conjecture = spec.conjecture;
  c.target = spec.target;
  c.measured = measured;
  // Edgeless graphs satisfy every bound vacuously and have no Ore-degree.
  c.applicable = facts.edges > 0 && spec.applies(facts, param);
  if (facts.edges > 0) {
    c.bound = spec.value(facts.delta, facts.sigma.value_or(0), param);
    c.bound_value = c.bound.floor();
  }
  c.holds = !c.applicable || c.bound.at_least(measured);
  c.tight = c.applicable && c.bound_value == measured;
  return c;
}

BoundCheck check_bound(const Graph& g, const BoundSpec& spec, int param,
                       int measured) {
  int k_max = kDefaultKMax;
  if (spec.param == ParamKind::kK) k_max = std::max(k_max, param);
  if (spec.param != ParamKind::kNone) k_max = std::max(k_max, param / 2 + 1);
  return check_bound(GraphFacts::of(g, k_max), spec, param, measured);
}

std::vector<Instantiation> applicable_bounds(const GraphFacts& facts,
                                             int k_max) {
  std::vector<Instantiation> out;
  if (facts.edges == 0) return out;
  for (const BoundSpec& spec : theorem_registry()) {
    for (int p : parameter_values(spec, k_max)) {
      if (spec.applies(facts, p)) out.push_back({&spec, p});
    }
  }
  return out;
}

std::vector<Instantiation> applicable_bounds(const Graph& g, int k_max) {
  return applicable_bounds(GraphFacts::of(g, k_max), k_max);
}

std::vector<BoundCheck> check_all(const GraphFacts& facts, int omega2,
                                  std::optional<int> chi2, int k_max) {
  std::vector<BoundCheck> out;
  for (const BoundSpec& spec : theorem_registry()) {
    if (spec.target == BoundTarget::kChi2 && !chi2) continue;
    const int measured = spec.target == BoundTarget::kChi2 ? *chi2 : omega2;
    for (int p : parameter_values(spec, k_max)) {
      out.push_back(check_bound(facts, spec, p, measured));
    }
  }
  return out;
}

BoundCheck check_lemma8(const Graph& g, const GraphFacts& facts,
                        const StrongCliqueWitness& h) {
  BoundCheck c;
  c.spec_id = "L8";
  c.measured = h.size();
  c.applicable = h.size() > 0 && !facts.profile.has_cycle(5);
  if (h.size() > 0) {
    std::vector<int> h_degree(g.order(), 0);
    for (EdgeId id : h.edge_ids) {
      ++h_degree[g.edge(id).u];
      ++h_degree[g.edge(id).v];
    }
    const int delta_h = *std::max_element(h_degree.begin(), h_degree.end());
    const int sigma_h = *ore_degree_of_subgraph(g, h.edge_ids);
    c.bound = Fraction::whole(I{delta_h} * (sigma_h - delta_h));
    c.bound_value = c.bound.floor();
  }
  c.holds = !c.applicable || c.bound.at_least(c.measured);
  c.tight = c.applicable && c.bound_value == c.measured;
  return c;
}

}  // namespace sclab
