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

#include <doctest.h>

#include "sclab/cycles.hpp"
#include "sclab/error.hpp"
#include "sclab/search.hpp"
#include "support.hpp"

using namespace sclab;
using namespace sclab::testing;

namespace {

void require_cycle_witness(const Graph& g, const std::vector<int>& c, int k) {
  REQUIRE(static_cast<int>(c.size()) == k);
  VertexSet seen = 0;
  for (int i = 0; i < k; ++i) {
    CHECK_FALSE(((seen >> c[i]) & 1U) != 0);
    seen |= bit(c[i]);
    CHECK(g.adjacent(c[i], c[(i + 1) % k]));
  }
}

void require_path_witness(const Graph& g, const std::vector<int>& p,
                          int order) {
  REQUIRE(static_cast<int>(p.size()) == order);
  VertexSet seen = 0;
  for (int i = 0; i < order; ++i) {
    CHECK_FALSE(((seen >> p[i]) & 1U) != 0);
    seen |= bit(p[i]);
    if (i > 0) CHECK(g.adjacent(p[i - 1], p[i]));
  }
}

}  // namespace

TEST_CASE("contains_cycle examples") {
  CHECK(contains_cycle(cycle(5), 5));
  CHECK_FALSE(contains_cycle(cycle(5), 4));
  const auto t = find_cycle(complete(4), 3);
  REQUIRE(t.has_value());
  require_cycle_witness(complete(4), *t, 3);
  CHECK_THROWS_AS(find_cycle(cycle(5), 2), Error);
  CHECK_THROWS_AS(find_cycle(cycle(5), 6), Error);
}

TEST_CASE("contains_path examples") {
  CHECK_THROWS_AS(contains_path(complete(3), 4), Error);
  CHECK(contains_path(cycle(5), 5));
  CHECK_THROWS_AS(contains_path(complete_bip(2, 2), 5), Error);
  CHECK(contains_path(complete_bip(2, 2), 4));
  CHECK_FALSE(contains_path(matching(3), 3));
}

TEST_CASE("cycle_profile examples") {
  const CycleProfile c6 = cycle_profile(cycle(6), 6);
  for (int k = 3; k <= 6; ++k) CHECK(c6.has_cycle(k) == (k == 6));
  CHECK(c6.girth == 6);

  const CycleProfile pet = cycle_profile(petersen(), 10);
  CHECK(pet.girth == 5);
  CHECK(pet.has_cycle(5));
  CHECK_FALSE(pet.has_cycle(3));
  CHECK_FALSE(pet.has_cycle(4));

  const Graph tree = make(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {4, 5}});
  const CycleProfile t = cycle_profile(tree, 6);
  CHECK_FALSE(t.girth.has_value());
  for (int k = 3; k <= 6; ++k) CHECK_FALSE(t.has_cycle(k));
}

TEST_CASE("cycle_profile clamps and refuses unprofiled lengths") {
  const CycleProfile p = cycle_profile(cycle(8), 4);
  CHECK(p.max_len == 4);
  CHECK_THROWS_AS(p.has_cycle(6), Error);
  CHECK_FALSE(p.has_cycle(9));
  CHECK(p.girth == 8);
  CHECK(cycle_profile(cycle(4), 40).max_len == 4);
}

TEST_CASE("profile invariants on random graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(rng, n, 1, 3);
    const CycleProfile p = cycle_profile(g, n);
    for (int q = 3; q <= n; ++q) {
      if (p.has_path(q)) CHECK(p.has_path(q - 1));
    }
    std::optional<int> girth;
    for (int k = 3; k <= n; ++k) {
      if (p.has_cycle(k)) {
        if (!girth) girth = k;
        CHECK(p.has_path(k));
      }
    }
    CHECK(p.girth == girth);
  }
}

TEST_CASE("oracle: cycles and paths agree with sequence enumeration, n <= 7") {
  int compared = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (int k = 3; k <= n; ++k) {
        const auto c = find_cycle(g, k);
        CHECK(c.has_value() == brute_has_cycle(g, k));
        if (c) require_cycle_witness(g, *c, k);
        ++compared;
      }
      for (int q = 2; q <= n; ++q) {
        const auto p = find_path(g, q);
        CHECK(p.has_value() == brute_has_path(g, q));
        if (p) require_path_witness(g, *p, q);
      }
    }
  }
  CHECK(compared > 5000);
}

TEST_CASE("long paths use the subset routine consistently") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 15 + static_cast<int>(rng.below(4));
    const Graph g = random_graph(rng, n, 1, 5);
    bool previous = true;
    for (int q = 12; q <= n; ++q) {
      const auto p = find_path(g, q);
      if (p) require_path_witness(g, *p, q);
      CHECK((previous || !p.has_value()));
      previous = p.has_value();
    }
  }
  const Graph long_path = path(18);
  const auto p = find_path(long_path, 18);
  REQUIRE(p.has_value());
  require_path_witness(long_path, *p, 18);
  CHECK(contains_cycle(cycle(18), 18));
}

TEST_CASE("closes_cycle and has_path_between") {
  const Graph p5 = path(5);
  CHECK(closes_cycle(p5, 0, 4, 5));
  CHECK_FALSE(closes_cycle(p5, 0, 4, 4));
  CHECK(closes_cycle(p5, 0, 2, 3));
  CHECK(has_path_between(p5, 0, 4, 5));
  CHECK_FALSE(has_path_between(p5, 0, 4, 3));
  CHECK_FALSE(closes_cycle(p5, 0, 4, 9));
}

TEST_CASE("branching_edges examples") {
  const Graph k22 = complete_bip(2, 2);
  const BranchingReport r = branching_edges(k22, bit(0) | bit(1), 2);
  CHECK(r.count() == 4);
  CHECK(branching_edges(star(5), bit(0), 2).count() == 0);
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Graph g = random_graph(rng, n, 1, 2);
    const VertexSet s = rng.next() & all_vertices(n);
    const BranchingReport b1 = branching_edges(g, s, 1);
    int crossing = 0;
    for (const Edge& e : g.edges()) {
      if (((s >> e.u) & 1U) != ((s >> e.v) & 1U)) ++crossing;
    }
    CHECK(b1.count() == crossing);
    CHECK(b1.count() == cross_subgraph(g, s).size());
    const int b = 1 + static_cast<int>(rng.below(3));
    for (EdgeId id : branching_edges(g, s, b).branching_edges) {
      const Edge& e = g.edge(id);
      const bool u_in = (s >> e.u) & 1U;
      CHECK(u_in != static_cast<bool>((s >> e.v) & 1U));
      const int outside = u_in ? e.v : e.u;
      CHECK(popcount(g.neighbours(outside) & s) >= b);
    }
  }
}

TEST_CASE("check_ksat examples") {
  const KsatCheck a = check_ksat(complete_bip(2, 2), bit(0) | bit(1), 2);
  CHECK(a.applicable);
  CHECK(a.branching_count == 4);
  CHECK(a.bound == 8);
  CHECK(a.holds);
  CHECK_FALSE(check_ksat(complete_bip(3, 3), bit(0) | bit(1) | bit(2), 2)
                  .applicable);
  const KsatCheck e = check_ksat(empty_graph(5), bit(0) | bit(3), 2);
  CHECK(e.applicable);
  CHECK(e.branching_count == 0);
  CHECK(e.holds);
  CHECK_THROWS_AS(check_ksat(cycle(4), bit(0), 1), Error);
}

TEST_CASE("check_erdos_gallai examples") {
  const ErdosGallaiCheck k3 = check_erdos_gallai(complete(3), 3);
  CHECK(k3.applicable);
  CHECK(k3.edges == 3);
  CHECK(k3.bound.equals(3));
  CHECK(k3.holds);
  const ErdosGallaiCheck m = check_erdos_gallai(matching(3), 2);
  CHECK(m.applicable);
  CHECK(m.bound.equals(3));
  CHECK(m.holds);
  CHECK_FALSE(check_erdos_gallai(path(5), 3).applicable);
}

TEST_CASE("property: 1000 applicable k-branching instances hold") {
  Rng rng(1010);
  int applicable = 0;
  int attempts = 0;
  while (applicable < 1000) {
    REQUIRE(++attempts < 200000);
    const int n = 2 + static_cast<int>(rng.below(11));
    const int k = 2 + static_cast<int>(rng.below(2));
    const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng.below(3)), 4);
    const VertexSet x = rng.next() & all_vertices(n);
    const KsatCheck c = check_ksat(g, x, k);
    if (!c.applicable) continue;
    ++applicable;
    CHECK(c.holds);
  }
}

TEST_CASE("property: Erdos-Gallai holds on every class n <= 8, ell <= 7") {
  int applicable = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (int ell = 2; ell <= 7; ++ell) {
        const ErdosGallaiCheck c = check_erdos_gallai(g, ell);
        if (!c.applicable) continue;
        ++applicable;
        CHECK(c.holds);
      }
    }
  }
  CHECK(applicable >= 1000);
}
