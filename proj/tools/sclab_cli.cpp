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

// Command-line front end. Talks to the library only through sclab.h.
//
// Exit codes: 0 success, 1 usage or input error, 2 a proven bound failed or a
// constructive procedure did (an implementation bug, surfaced for CI).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sclab/sclab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUnsound = 2;

struct Failure {
  std::string message;
};

void check(sclab_status status, const std::string& context) {
  if (status != SCLAB_OK) {
    throw Failure{context + ": " + sclab_status_name(status) + ": " +
                  sclab_last_error()};
  }
}

struct GraphDeleter {
  void operator()(sclab_graph* g) const { sclab_graph_free(g); }
};
using GraphPtr = std::unique_ptr<sclab_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sclab_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Input sources shared by the single-graph commands.
struct GraphInput {
  std::string path = "-";
  std::string inline_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path,
                    "graph6 lines or an edge list; '-' reads stdin")
        ->capture_default_str();
    cmd->add_option("-g,--graph", inline_text,
                    "inline graph6 string or edge list ('n; u v; ...')");
  }

  // One graph per graph6 line, or one edge list.
  std::vector<GraphPtr> load() const {
    const std::string text = inline_text.empty() ? slurp(path) : inline_text;
    std::vector<GraphPtr> out;
    sclab_graph* g = nullptr;
    if (sclab_graph_parse(text.c_str(), &g) == SCLAB_OK) {
      out.emplace_back(g);
      return out;
    }
    // Several graph6 lines.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      check(sclab_graph_parse(line.c_str(), &g), "parsing '" + line + "'");
      out.emplace_back(g);
    }
    if (out.empty()) throw Failure{"no graph in input"};
    return out;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Failure{"cannot write " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string edge_text(const sclab_graph* g, int id) {
  int u = 0;
  int v = 0;
  check(sclab_graph_edge(g, id, &u, &v), "edge lookup");
  return std::to_string(u) + "-" + std::to_string(v);
}

int run_compute(const GraphInput& input, bool chi, int chi_budget) {
  for (const GraphPtr& g : input.load()) {
    std::vector<int> witness(std::max(sclab_graph_size(g.get()), 1));
    int value = 0;
    int length = 0;
    check(sclab_strong_clique(g.get(), &value, witness.data(), &length),
          "strong clique");
    std::cout << "omega2' = " << value << "\nwitness:";
    for (int i = 0; i < length; ++i) {
      std::cout << ' ' << edge_text(g.get(), witness[i]);
    }
    std::cout << '\n';
    if (chi) {
      std::vector<int> colours(std::max(sclab_graph_size(g.get()), 1));
      int classes = 0;
      check(sclab_strong_chromatic_index(g.get(), chi_budget, &classes,
                                         colours.data()),
            "strong chromatic index");
      std::cout << "chi2' = " << classes << "\ncolouring:";
      for (int i = 0; i < sclab_graph_size(g.get()); ++i) {
        std::cout << ' ' << edge_text(g.get(), i) << ':' << colours[i];
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int run_profile(const GraphInput& input, int max_len, bool json) {
  for (const GraphPtr& g : input.load()) {
    char* out = nullptr;
    const int len = max_len > 0 ? max_len : sclab_graph_order(g.get());
    check(sclab_profile(g.get(), std::max(len, 3),
                        json ? SCLAB_FORMAT_JSON : SCLAB_FORMAT_TEXT, &out),
          "profile");
    OwnedString text(out);
    std::cout << text.get() << (json ? "\n" : "");
  }
  return kExitOk;
}

int run_verify(const GraphInput& input, const sclab_sweep_options& options,
               bool json) {
  int status = kExitOk;
  for (const GraphPtr& g : input.load()) {
    char* out = nullptr;
    int sound = 1;
    check(sclab_verify(g.get(), &options,
                       json ? SCLAB_FORMAT_JSON : SCLAB_FORMAT_TEXT, &out,
                       &sound),
          "verify");
    OwnedString text(out);
    std::cout << text.get() << (json ? "\n" : "");
    if (!sound) status = kExitUnsound;
  }
  return status;
}

struct SweepArgs {
  std::vector<int> enumerate;
  int max_order = 0;
  std::string input;
  std::string output;
};

void write_line(const char* line, void* user) {
  std::ostream& out = *static_cast<std::ostream*>(user);
  out << line << '\n';
}

int run_sweep(const SweepArgs& args, const sclab_sweep_options& options) {
  sclab_sweep* raw = nullptr;
  check(sclab_sweep_create(&raw), "sweep");
  std::unique_ptr<sclab_sweep, void (*)(sclab_sweep*)> s(raw, sclab_sweep_free);
  std::vector<int> orders = args.enumerate;
  for (int n = 1; n <= args.max_order; ++n) orders.push_back(n);
  for (int n : orders) {
    check(sclab_sweep_add_enumerated(s.get(), n),
          "enumerating n = " + std::to_string(n));
  }
  if (orders.empty() || !args.input.empty()) {
    const std::string text = slurp(args.input.empty() ? "-" : args.input);
    check(sclab_sweep_add_text(s.get(), text.c_str()), "reading graphs");
  }
  Output out(args.output);
  int sound = 1;
  check(sclab_sweep_run(s.get(), &options, write_line, &out.stream(), &sound),
        "sweep");
  out.stream().flush();
  if (!sound) {
    std::cerr << "sweep: a proven bound or constructive check failed\n";
    return kExitUnsound;
  }
  return kExitOk;
}

struct HuntArgs {
  std::string target = "CONJ4";
  int k = 2;
  int n = 10;
  int delta_cap = 5;
  std::vector<int> forbid;
  bool bipartite = false;
  std::uint64_t seed = 0;
  std::int64_t max_steps = 10000;
  int restarts = 0;
  int sideways = 50;
  int threads = 1;
  std::string initial;
  bool inject = false;
  std::string output;
};

int run_hunt(const HuntArgs& args) {
  sclab_hunt_config config;
  sclab_hunt_config_default(&config);
  config.target = args.target.c_str();
  config.k = args.k;
  config.n = args.n;
  config.delta_cap = args.delta_cap;
  if (!args.forbid.empty() || args.bipartite) {
    config.forbidden = args.forbid.data();
    config.forbidden_count = args.forbid.size();
    config.bipartite = args.bipartite ? 1 : 0;
  }
  config.seed = args.seed;
  config.max_steps = args.max_steps;
  config.restarts = args.restarts;
  config.sideways_budget = args.sideways;
  config.threads = args.threads;
  config.inject_construction = args.inject ? 1 : 0;
  GraphPtr initial;
  if (!args.initial.empty()) {
    sclab_graph* g = nullptr;
    check(sclab_graph_parse(args.initial.c_str(), &g), "initial graph");
    initial.reset(g);
    config.initial = g;
  }
  char* json = nullptr;
  sclab_graph* best_raw = nullptr;
  check(sclab_hunt(&config, &json, &best_raw), "hunt");
  OwnedString record(json);
  GraphPtr best(best_raw);
  Output out(args.output);
  out.stream() << record.get() << '\n';
  out.stream().flush();
  if (out.to_file()) {
    char* g6 = nullptr;
    check(sclab_graph_graph6(best.get(), &g6), "graph6");
    OwnedString text(g6);
    std::cout << text.get() << '\n';
  }
  return kExitOk;
}

int run_construct(const std::string& family,
                  const std::vector<std::string>& params, bool edge_list) {
  std::string joined;
  for (const std::string& p : params) joined += p + " ";
  sclab_graph* raw = nullptr;
  char* spec = nullptr;
  check(sclab_construct(family.c_str(), joined.c_str(), &raw, &spec),
        "construct " + family);
  GraphPtr g(raw);
  OwnedString spec_json(spec);
  char* text = nullptr;
  check(edge_list ? sclab_graph_edge_list(g.get(), &text)
                  : sclab_graph_graph6(g.get(), &text),
        "format");
  OwnedString body(text);
  std::cout << body.get() << (edge_list ? "" : "\n");
  std::cout << spec_json.get() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sclab: exact strong clique numbers and strong chromatic "
               "indices of graphs with forbidden cycles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sclab_version()));

  sclab_sweep_options options;
  sclab_sweep_options_default(&options);
  bool chi = false;
  bool json = false;

  GraphInput compute_in;
  auto* compute = app.add_subcommand("compute", "exact omega2' (and chi2')");
  compute_in.attach(compute);
  compute->add_flag("--chi", chi, "also compute chi2'");
  compute->add_option("--chi-budget", options.chi_edge_budget,
                      "largest edge count for chi2'")
      ->capture_default_str();

  GraphInput profile_in;
  int max_len = 0;
  auto* profile = app.add_subcommand("profile", "cycle and path profile");
  profile_in.attach(profile);
  profile->add_option("--max-len", max_len,
                      "longest cycle length to test (default n)");
  profile->add_flag("--json", json, "emit JSON");

  GraphInput verify_in;
  auto* verify = app.add_subcommand("verify", "evaluate every bound");
  verify_in.attach(verify);
  verify->add_option("--k-max", options.k_max, "largest k instantiated")
      ->capture_default_str();
  verify->add_flag("--chi", chi, "also compute chi2'");
  verify->add_option("--chi-budget", options.chi_edge_budget,
                     "largest edge count for chi2'")
      ->capture_default_str();
  verify->add_flag("--json", json, "emit JSON");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "verify bounds over a stream");
  sweep->add_option("input", sweep_args.input,
                    "graph6 file ('-' for stdin; default when no "
                    "enumeration is requested)");
  sweep->add_option("--enumerate", sweep_args.enumerate,
                    "add every isomorphism class on N vertices (N <= 8)");
  sweep->add_option("--max-order", sweep_args.max_order,
                    "add every isomorphism class on 1..N vertices");
  sweep->add_option("-o,--output", sweep_args.output, "JSON Lines report");
  sweep->add_option("--k-max", options.k_max, "largest k instantiated")
      ->capture_default_str();
  sweep->add_flag("--chi", chi, "also compute chi2'");
  sweep->add_option("--chi-budget", options.chi_edge_budget,
                    "largest edge count for chi2'")
      ->capture_default_str();
  sweep->add_option("--threads", options.threads, "workers; 0 = all cores")
      ->capture_default_str();

  HuntArgs hunt_args;
  auto* hunt = app.add_subcommand("hunt", "seeded counterexample search");
  hunt->add_option("--target", hunt_args.target, "bound id")
      ->capture_default_str();
  hunt->add_option("--k", hunt_args.k, "conjecture parameter")
      ->capture_default_str();
  hunt->add_option("--n", hunt_args.n, "vertex budget")->capture_default_str();
  hunt->add_option("--delta-cap", hunt_args.delta_cap, "maximum degree cap")
      ->capture_default_str();
  hunt->add_option("--forbid", hunt_args.forbid,
                   "forbidden cycle lengths (default: the target's own)");
  hunt->add_flag("--bipartite", hunt_args.bipartite,
                 "keep the graph bipartite (with --forbid)");
  hunt->add_option("--seed", hunt_args.seed, "RNG seed")->capture_default_str();
  hunt->add_option("--max-steps", hunt_args.max_steps, "moves per restart")
      ->capture_default_str();
  hunt->add_option("--restarts", hunt_args.restarts, "extra restarts")
      ->capture_default_str();
  hunt->add_option("--sideways", hunt_args.sideways,
                   "plateau moves before a random kick")
      ->capture_default_str();
  hunt->add_option("--threads", hunt_args.threads, "workers; 0 = all cores")
      ->capture_default_str();
  hunt->add_option("--initial", hunt_args.initial,
                   "start state (graph6 or edge list)");
  hunt->add_flag("--inject-construction", hunt_args.inject,
                 "start from the known extremal construction");
  hunt->add_option("-o,--output", hunt_args.output, "JSON record");

  std::string family;
  std::vector<std::string> params;
  bool edge_list = false;
  auto* construct = app.add_subcommand("construct", "extremal constructions");
  construct
      ->add_option("family", family,
                   "blown_up_c5 | hairy_clique | complete_bipartite | "
                   "bip_pendant")
      ->required();
  construct->add_option("params", params, "name=value pairs, e.g. q=3 delta=4");
  construct->add_flag("--edge-list", edge_list, "print an edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  options.include_chi = chi ? 1 : 0;

  try {
    if (*compute) return run_compute(compute_in, chi, options.chi_edge_budget);
    if (*profile) return run_profile(profile_in, max_len, json);
    if (*verify) return run_verify(verify_in, options, json);
    if (*sweep) return run_sweep(sweep_args, options);
    if (*hunt) return run_hunt(hunt_args);
    if (*construct) return run_construct(family, params, edge_list);
  } catch (const Failure& f) {
    std::cerr << "sclab: " << f.message << '\n';
    return kExitInput;
  }
  return kExitInput;
}
