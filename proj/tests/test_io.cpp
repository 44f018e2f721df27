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

#include <sstream>

#include "sclab/error.hpp"
#include "sclab/io.hpp"
#include "support.hpp"

using namespace sclab;
using namespace sclab::testing;

namespace {

// Straight reading of the format: N(n) then the upper triangle column by
// column, six bits per byte, most significant first.
Graph reference_decode(const std::string& s) {
  std::size_t pos = 0;
  int n = s[0] - 63;
  pos = 1;
  if (s[0] == '~') {
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  std::vector<int> bits;
  for (std::size_t i = pos; i < s.size(); ++i) {
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[k++]) edges.push_back({i, j});
    }
  }
  return Graph::build(n, edges);
}

ErrorCode code_of(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << text);
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("graph6 small examples") {
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("A?") == empty_graph(2));
  CHECK(parse_graph6("@") == empty_graph(1));
  CHECK(format_graph6(complete(3)) == "Bw");
  CHECK(format_graph6(empty_graph(1)) == "@");
  CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
  CHECK(parse_graph6("  Bw\n") == complete(3));
}

TEST_CASE("graph6 agrees with a reference encoder") {
  // Strings produced by networkx.to_graph6_bytes.
  CHECK(format_graph6(petersen()) == "IheA@GUAo");
  CHECK(format_graph6(cycle(5)) == "Dhc");
  CHECK(format_graph6(complete(4)) == "C~");
  CHECK(format_graph6(path(63)) == "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G");
  CHECK(parse_graph6("~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G") == path(63));
  CHECK(format_graph6(star(63)) == "~?@?saCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???O???_???_???O???C????_???A????C????C????A?????_????C?????O?????_?????_?????O?????C??????_?????A??????C??????C??????A???????_??????C???????O???????_???????_???????O???????C????????_???????A????????C????????C????????A?????????_????????C?????????O?????????_?????????_?????????O?????????C??????????");
  CHECK(parse_graph6("~?@?saCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???O???_???_???O???C????_???A????C????C????A?????_????C?????O?????_?????_?????O?????C??????_?????A??????C??????C??????A???????_??????C???????O???????_???????_???????O???????C????????_???????A????????C????????C????????A?????????_????????C?????????O?????????_?????????_?????????O?????????C??????????") == star(63));
}

TEST_CASE("graph6 round trip on random graphs") {
  Rng rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(64));
    if (trial == 0) n = 63;
    if (trial == 1) n = 64;
    if (trial == 2) n = 62;
    const Graph g = random_graph(rng, n, 1, 2);
    const std::string s = format_graph6(g);
    INFO(s);
    CHECK(parse_graph6(s) == g);
    CHECK(reference_decode(s) == g);
    CHECK(format_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 errors") {
  CHECK(code_of("") == ErrorCode::kParse);
  CHECK(code_of("   ") == ErrorCode::kParse);
  CHECK(code_of("?") == ErrorCode::kParse);        // n = 0
  CHECK(code_of("B") == ErrorCode::kParse);        // missing body
  CHECK(code_of("Bww") == ErrorCode::kParse);      // extra byte
  CHECK(code_of("B\x7f") == ErrorCode::kParse);    // byte out of range
  CHECK(code_of("B ") == ErrorCode::kParse);
  CHECK(code_of("Bx") == ErrorCode::kParse);       // padding bit set
  CHECK(code_of("~??~") == ErrorCode::kParse);     // truncated body, n = 63
  CHECK(code_of("~?@A") == ErrorCode::kCapacity);  // n = 66
  CHECK(code_of("~~??????") == ErrorCode::kCapacity);
  CHECK(code_of("~??") == ErrorCode::kParse);
}

TEST_CASE("edge lists") {
  const Graph c5 = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(c5 == cycle(5));
  CHECK(parse_edge_list("5;0 1;1 2;2 3;3 4;4 0") == cycle(5));
  CHECK(parse_edge_list("# a comment\n3  # order\n0,1\n\n1 2 # tail\n") ==
        make(3, {{0, 1}, {1, 2}}));
  CHECK(parse_edge_list("4\n") == empty_graph(4));
  CHECK(parse_edge_list(format_edge_list(petersen())) == petersen());
  CHECK_THROWS_AS(parse_edge_list(""), Error);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("65\n"), Error);
}

TEST_CASE("format detection") {
  CHECK(looks_like_edge_list("3\n0 1\n"));
  CHECK(looks_like_edge_list("# c\n3;0 1"));
  CHECK_FALSE(looks_like_edge_list("Bw"));
  CHECK_FALSE(looks_like_edge_list(">>graph6<<Bw"));
  CHECK_FALSE(looks_like_edge_list(""));
  CHECK(parse_graph_text("Bw") == complete(3));
  CHECK(parse_graph_text("3\n0 1\n1 2\n0 2") == complete(3));
}

TEST_CASE("read_graphs") {
  std::istringstream many("Bw\n\nDhc\nC~\n");
  const auto gs = read_graphs(many);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == complete(3));
  CHECK(gs[1] == cycle(5));
  CHECK(gs[2] == complete(4));
  std::istringstream one("3\n0 1\n");
  const auto single = read_graphs(one);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == make(3, {{0, 1}}));
  std::istringstream bad("Bw\nzz\n");
  CHECK_THROWS_AS(read_graphs(bad), Error);
}
