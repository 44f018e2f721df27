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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/graph.hpp"

namespace sclab {

// graph6: a size header (one byte n + 63 for n <= 62, otherwise '~' followed
// by three bytes), then the upper triangle in column order x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed six bits per byte, most significant first, each
// byte offset by 63. An optional ">>graph6<<" prefix is accepted.
//
// Throws Error(kParse) for a malformed header, bytes outside [63, 126], a
// body of the wrong length or nonzero padding; Error(kCapacity) for n > 64.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

// "n" on the first line, then one "u v" pair per line. Semicolons count as
// line breaks so a whole graph fits on a command line.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Edge-list text starts with a bare integer, which no graph6 header can be.
bool looks_like_edge_list(std::string_view text);
Graph parse_graph_text(std::string_view text);

// Reads a stream: a single edge list, or graph6 lines with blank lines
// skipped.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace sclab
