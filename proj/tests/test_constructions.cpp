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

#include "sclab/constructions.hpp"
#include "sclab/cycles.hpp"
#include "sclab/error.hpp"
#include "sclab/strong_clique.hpp"
#include "support.hpp"

using namespace sclab;
using namespace sclab::testing;

namespace {

void require_consistent(const Construction& c) {
  CHECK(max_degree(c.graph) == c.spec.expected_max_degree);
  CHECK(strong_clique_number(c.graph).value == c.spec.expected_strong_clique);
}

}  // namespace

TEST_CASE("blown_up_c5 examples") {
  const Construction t1 = blown_up_c5(1);
  CHECK(t1.graph == cycle(5));
  CHECK(t1.spec.expected_strong_clique == 5);
  const Construction t2 = blown_up_c5(2);
  CHECK(t2.graph.order() == 10);
  CHECK(t2.graph.size() == 20);
  CHECK(t2.spec.expected_max_degree == 4);
  CHECK(t2.spec.expected_strong_clique == 20);
  const Construction t3 = blown_up_c5(3);
  CHECK(t3.graph.order() == 15);
  CHECK(t3.spec.expected_max_degree == 6);
  CHECK(t3.spec.expected_strong_clique == 45);
  for (int t = 1; t <= 3; ++t) {
    const Construction c = blown_up_c5(t);
    require_consistent(c);
    CHECK_FALSE(contains_cycle(c.graph, 3));
  }
  CHECK_THROWS_AS(blown_up_c5(13), Error);
  CHECK_THROWS_AS(blown_up_c5(0), Error);
}

TEST_CASE("hairy_clique examples") {
  const Construction a = hairy_clique(3, 4);
  CHECK(a.graph.size() == 9);
  CHECK(a.spec.expected_strong_clique == 9);
  CHECK(a.graph == hairy_triangle(4));
  CHECK(hairy_clique(3, 3).spec.expected_strong_clique == 6);
  const Construction k5 = hairy_clique(5, 5);
  CHECK(k5.spec.expected_strong_clique == 15);
  CHECK(k5.spec.parameters.at("k") == 3);
  for (auto [q, d] : {std::pair{3, 4}, std::pair{3, 3}, std::pair{5, 5},
                      std::pair{4, 5}, std::pair{5, 7}}) {
    require_consistent(hairy_clique(q, d));
  }
  CHECK_THROWS_AS(hairy_clique(2, 4), Error);
  CHECK_THROWS_AS(hairy_clique(5, 3), Error);
}

TEST_CASE("hairy clique of order 2k-1 has no cycle longer than 2k-1") {
  for (int k = 2; k <= 4; ++k) {
    for (int d = 2 * k - 2; d <= 2 * k + 1; ++d) {
      const Construction c = hairy_clique(2 * k - 1, d);
      CHECK(c.spec.expected_strong_clique == (2 * k - 1) * (d - k + 1));
      const CycleProfile p = cycle_profile(c.graph, c.graph.order());
      for (int len = 2 * k; len <= c.graph.order(); ++len) {
        CHECK_FALSE(p.has_cycle(len));
      }
    }
  }
}

TEST_CASE("complete_bipartite examples") {
  CHECK(complete_bipartite(2, 2).spec.expected_strong_clique == 4);
  CHECK(complete_bipartite(3, 3).spec.expected_strong_clique == 9);
  const Construction s = complete_bipartite(1, 5);
  CHECK(s.spec.expected_strong_clique == 5);
  CHECK(s.graph == star(5));
  for (int a = 1; a <= 5; ++a) {
    for (int b = a; b <= 5; ++b) require_consistent(complete_bipartite(a, b));
  }
}

TEST_CASE("bip_pendant_construction examples") {
  const Construction a = bip_pendant_construction(2, 3);
  CHECK(a.graph.size() == 5);
  CHECK(a.spec.expected_strong_clique == 5);
  const Construction b = bip_pendant_construction(3, 4);
  CHECK(b.spec.expected_strong_clique == 10);
  CHECK(strong_clique_number(b.graph).value == 10);
  const Construction c = bip_pendant_construction(2, 2);
  CHECK(c.spec.expected_strong_clique == 3);
  CHECK(c.graph.size() == 3);
  CHECK(strong_clique_number(c.graph).value == 3);
  for (int k = 2; k <= 4; ++k) {
    for (int d = k - 1; d <= k + 3; ++d) {
      const Construction g = bip_pendant_construction(k, d);
      require_consistent(g);
      CHECK(is_bipartite(g.graph));
      for (int len = 2 * k; len <= g.graph.order(); len += 2) {
        CHECK_FALSE(contains_cycle(g.graph, len));
      }
    }
  }
}

TEST_CASE("construct dispatches by name") {
  const Construction h = construct("hairy_clique", {{"q", 3}, {"delta", 4}});
  CHECK(h.spec.family == Family::kHairyClique);
  CHECK(h.spec.expected_strong_clique == 9);
  CHECK(family_name(h.spec.family) == "hairy_clique");
  CHECK(construct("blown_up_c5", {{"t", 2}}).graph.size() == 20);
  CHECK(construct("complete_bipartite", {{"a", 2}, {"b", 3}}).graph.size() == 6);
  CHECK(construct("bip_pendant", {{"k", 2}, {"delta", 3}}).graph.size() == 5);
  CHECK_THROWS_AS(construct("nope", {}), Error);
  CHECK_THROWS_AS(construct("hairy_clique", {{"q", 3}}), Error);
}
