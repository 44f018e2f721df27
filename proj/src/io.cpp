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

#include "sclab/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "sclab/error.hpp"

namespace sclab {
namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int byte_value(char c) {
  const int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) {
    throw Error(ErrorCode::kParse,
                std::string("graph6 byte out of range: '") + c + "'");
  }
  return v;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

bool parse_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           (std::isspace(static_cast<unsigned char>(line[i])) ||
            line[i] == ',')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != ',') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
  }
  if (line.empty()) throw Error(ErrorCode::kParse, "empty graph6 string");
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = byte_value(line[0]);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') {
      throw Error(ErrorCode::kCapacity, "graph6 order exceeds capacity 64");
    }
    if (line.size() < 4) {
      throw Error(ErrorCode::kParse, "truncated graph6 size header");
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_value(line[i]);
    if (n < 63) {
      throw Error(ErrorCode::kParse, "non-canonical graph6 size header");
    }
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kCapacity, "graph6 order " + std::to_string(n) +
                                          " exceeds capacity 64");
  }
  if (n == 0) throw Error(ErrorCode::kParse, "graph6 order 0 not supported");
  const long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != body) {
    throw Error(ErrorCode::kParse,
                "graph6 body has " + std::to_string(line.size() - pos) +
                    " bytes, expected " + std::to_string(body));
  }
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int v = byte_value(line[pos + k / 6]);
      if ((v >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < static_cast<long>(body) * 6; ++k) {
    const int v = byte_value(line[pos + k / 6]);
    if ((v >> (5 - k % 6)) & 1) {
      throw Error(ErrorCode::kParse, "graph6 padding bits are not zero");
    }
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    const auto toks = tokens(line);
    if (n < 0) {
      if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0) {
        throw Error(ErrorCode::kParse,
                    "edge list must start with the vertex count");
      }
      continue;
    }
    Edge e;
    if (toks.size() != 2 || !parse_int(toks[0], e.u) ||
        !parse_int(toks[1], e.v)) {
      throw Error(ErrorCode::kParse, "edge list line " +
                                         std::to_string(line_no) +
                                         ": expected 'u v'");
    }
    edges.push_back(e);
  }
  if (n < 0) throw Error(ErrorCode::kParse, "empty edge list");
  return Graph::build(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

bool looks_like_edge_list(std::string_view text) {
  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    const auto toks = tokens(line);
    int n = 0;
    return toks.size() == 1 && parse_int(toks[0], n);
  }
  return false;
}

Graph parse_graph_text(std::string_view text) {
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  return parse_graph6(text);
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (looks_like_edge_list(text)) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace sclab
