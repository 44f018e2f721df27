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

// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria (capped at 1).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sclab/constructions.hpp"
#include "sclab/cycles.hpp"
#include "sclab/io.hpp"
#include "sclab/search.hpp"
#include "support.hpp"

using namespace sclab;
using namespace sclab::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    if (!ok) pass = false;
  }
};

int omega(const Graph& g) { return strong_clique_number(g).value; }

bool free_of(const Graph& g, int len) {
  return !cycle_profile(g, len).has_cycle(len);
}

// The exhaustive sweep is shared by criteria 6, 9, 10 and 11.
struct SweepData {
  std::vector<Graph> graphs;
  SweepReport report;
};

const SweepData& full_sweep() {
  static const SweepData data = [] {
    SweepData d;
    for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
      const auto& reps = enumerate_graphs(n);
      d.graphs.insert(d.graphs.end(), reps.begin(), reps.end());
    }
    SweepOptions o;
    o.include_chi = true;
    o.threads = 0;
    d.report = sweep(d.graphs, o);
    return d;
  }();
  return data;
}

void criterion1(Outcome& out) {
  for (int t = 1; t <= 3; ++t) {
    const Construction c = blown_up_c5(t);
    out.expect(omega(c.graph) == 5 * t * t, "omega of blown-up C5, t=" +
                                                std::to_string(t));
    out.expect(free_of(c.graph, 3), "triangle found, t=" + std::to_string(t));
  }
  out.detail << "t=1..3 give 5, 20, 45";
}

void criterion2(Outcome& out) {
  for (int d = 2; d <= 5; ++d) {
    out.expect(omega(complete_bipartite(d, d).graph) == d * d,
               "K_{D,D}, D=" + std::to_string(d));
  }
  out.detail << "D=2..5";
}

void criterion3(Outcome& out) {
  for (int d = 4; d <= 10; ++d) {
    const Graph g = hairy_clique(3, d).graph;
    out.expect(omega(g) == 3 * (d - 1), "hairy_clique(3," + std::to_string(d) + ")");
    out.expect(free_of(g, 4), "C4 in hairy_clique(3," + std::to_string(d) + ")");
  }
  out.detail << "D=4..10";
}

void criterion4(Outcome& out) {
  for (int d = 5; d <= 7; ++d) {
    const Graph g = hairy_clique(5, d).graph;
    out.expect(omega(g) == 5 * (d - 2), "hairy_clique(5," + std::to_string(d) + ")");
    out.expect(free_of(g, 6), "C6 in hairy_clique(5," + std::to_string(d) + ")");
  }
  out.detail << "D=5..7";
}

void criterion5(Outcome& out) {
  const std::array<std::pair<int, int>, 4> cases = {
      {{2, 3}, {2, 4}, {3, 4}, {3, 5}}};
  for (const auto& [k, d] : cases) {
    const Graph g = bip_pendant_construction(k, d).graph;
    const std::string tag = "(" + std::to_string(k) + "," + std::to_string(d) + ")";
    out.expect(omega(g) == k * (d - 1) + 1, "omega at " + tag);
    out.expect(is_bipartite(g), "not bipartite at " + tag);
    out.expect(free_of(g, 2 * k), "C_2k present at " + tag);
  }
  out.detail << "4 parameter pairs";
}

void criterion6(Outcome& out) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Edge> edges;
      int bit = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
          if ((mask >> bit) & 1) edges.push_back({i, j});
        }
      }
      classes.insert(brute_canonical(Graph::build(n, edges)));
    }
    out.expect(classes.size() == enumerate_graphs(n).size(),
               "class count differs at n=" + std::to_string(n));
  }
  const SweepReport& r = full_sweep().report;
  int proven = 0;
  for (const Violation& v : r.violations) {
    if (v.check.spec_id[0] == 'T') ++proven;
  }
  int applicable = 0;
  for (const auto& [key, t] : r.tallies) {
    if (key[0] == 'T') applicable += t.applicable;
  }
  out.expect(r.graphs_skipped == 0, "graphs skipped");
  out.expect(proven == 0, std::to_string(proven) + " T-bound violations");
  out.detail << r.graphs_processed << " classes, " << applicable
             << " applicable T-checks, " << proven << " violations";
}

void criterion7(Outcome& out) {
  int compared = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      out.expect(omega(g) == strong_clique_number_bruteforce(g),
                 "mismatch on " + format_graph6(g));
      ++compared;
    }
  }
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const int max_m = std::min(14, n * (n - 1) / 2);
    const Graph g = random_graph_m(rng, n, static_cast<int>(rng.below(max_m + 1)));
    out.expect(omega(g) == strong_clique_number_bruteforce(g),
               "mismatch on " + format_graph6(g));
    ++compared;
  }
  out.detail << compared << " graphs";
}

void criterion8(Outcome& out) {
  Rng rng(8);
  int ksat = 0;
  int failures = 0;
  while (ksat < 1000) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const int k = 2 + static_cast<int>(rng.below(2));
    const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng.below(3)), 4);
    const VertexSet x = rng.next() & all_vertices(n);
    const KsatCheck c = check_ksat(g, x, k);
    if (!c.applicable) continue;
    ++ksat;
    if (!c.holds) ++failures;
  }
  int eg = 0;
  while (eg < 1000) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const int ell = 2 + static_cast<int>(rng.below(6));
    const Graph g = random_graph(rng, n, 1, 2 + static_cast<int>(rng.below(4)));
    const ErdosGallaiCheck c = check_erdos_gallai(g, ell);
    if (!c.applicable) continue;
    ++eg;
    if (!c.holds) ++failures;
  }
  out.expect(failures == 0, std::to_string(failures) + " failures");
  out.detail << ksat << " k-branching and " << eg
             << " path-free instances, " << failures << " failures";
}

void criterion9(Outcome& out) {
  const SweepData& d = full_sweep();
  int reduced = 0;
  for (std::size_t i = 0; i < d.graphs.size(); ++i) {
    const Graph& g = d.graphs[i];
    const GraphRecord& r = d.report.records[i];
    const bool eligible =
        g.size() > 0 && free_of(g, 3) && (g.order() < 5 || free_of(g, 5));
    out.expect(eligible == r.reduction.has_value(), "eligibility " + r.graph6);
    if (!r.reduction) continue;
    ++reduced;
    out.expect(r.reduction->bipartite, "core not bipartite for " + r.graph6);
    out.expect(r.reduction->core_omega2 == r.omega2, "omega changed for " + r.graph6);
  }
  out.detail << reduced << " {C3,C5}-free classes";
}

void criterion10(Outcome& out) {
  const SweepData& d = full_sweep();
  int paths = 0;
  for (const GraphRecord& r : d.report.records) {
    const bool needed = r.m > 0 && r.omega2 > r.delta;
    out.expect(needed == r.h_path.has_value(), "path missing for " + r.graph6);
    if (!r.h_path) continue;
    ++paths;
    out.expect(r.h_path->error.empty(), r.graph6 + ": " + r.h_path->error);
    out.expect(r.h_path->order >= r.h_path->required, "short path on " + r.graph6);
  }
  out.detail << paths << " graphs with omega2' > Delta";
}

void criterion11(Outcome& out) {
  const Graph c5 = parse_graph6("Dhc");
  const int chi = strong_chromatic_index(c5).value;
  out.expect(chi == 5, "chi2'(C5) = " + std::to_string(chi));
  out.expect(find_bound("CONJ1").value(2, 0, 0).equals(chi), "5D^2/4 at D=2");
  int both = 0;
  for (const GraphRecord& r : full_sweep().report.records) {
    if (!r.chi2) continue;
    ++both;
    out.expect(*r.chi2 >= r.omega2, "chi2' < omega2' on " + r.graph6);
  }
  out.detail << "chi2'(C5)=5; " << both << " graphs with both values";
}

std::string run(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  if (status != 0) output += "<exit " + std::to_string(status) + ">";
  return output;
}

void criterion12(Outcome& out) {
  const std::string cli = SCLAB_CLI_PATH;
  const std::string sweep_cmd =
      cli + " sweep --enumerate 6 --chi --threads 4";
  const std::string hunt_cmd = cli +
      " hunt --target CONJ4 --k 2 --n 10 --delta-cap 5 --seed 7"
      " --max-steps 400 --restarts 3 --threads 4";
  const std::string s1 = run(sweep_cmd);
  const std::string s2 = run(sweep_cmd);
  const std::string h1 = run(hunt_cmd);
  const std::string h2 = run(hunt_cmd);
  out.expect(s1.find("<exit") == std::string::npos && !s1.empty(), "sweep failed");
  out.expect(h1.find("<exit") == std::string::npos && !h1.empty(), "hunt failed");
  out.expect(s1 == s2, "sweep reports differ");
  out.expect(h1 == h2, "hunt reports differ");
  out.detail << "sweep " << s1.size() << " bytes, hunt " << h1.size()
             << " bytes, identical across runs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"sharpness of the blown-up C5", criterion1},
      {"sharpness of K_{D,D}", criterion2},
      {"hairy triangle, k=2", criterion3},
      {"hairy clique, k=3", criterion4},
      {"bipartite pendant construction", criterion5},
      {"exhaustive soundness sweep n<=8", criterion6},
      {"exact solver equals brute force", criterion7},
      {"k-branching and path-free edge counts", criterion8},
      {"bipartite reduction", criterion9},
      {"H-sided path length", criterion10},
      {"strong chromatic index spot checks", criterion11},
      {"sweep and hunt determinism", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!out.pass) ++failed;
    std::printf("%s %2zu %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), out.detail.str().c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
