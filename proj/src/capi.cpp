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

#include "sclab/sclab.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "sclab/constructions.hpp"
#include "sclab/error.hpp"
#include "sclab/io.hpp"
#include "sclab/report.hpp"
#include "sclab/search.hpp"

struct sclab_graph {
  sclab::Graph graph;
};

struct sclab_sweep {
  std::vector<sclab::Graph> graphs;
};

namespace {

thread_local std::string last_error;

sclab_status to_status(sclab::ErrorCode code) {
  switch (code) {
    case sclab::ErrorCode::kInvalidArgument: return SCLAB_ERR_INVALID_ARGUMENT;
    case sclab::ErrorCode::kCapacity: return SCLAB_ERR_CAPACITY;
    case sclab::ErrorCode::kOutOfRange: return SCLAB_ERR_OUT_OF_RANGE;
    case sclab::ErrorCode::kParse: return SCLAB_ERR_PARSE;
    case sclab::ErrorCode::kBudgetExceeded: return SCLAB_ERR_BUDGET_EXCEEDED;
    case sclab::ErrorCode::kPrecondition: return SCLAB_ERR_PRECONDITION;
    case sclab::ErrorCode::kInternal: return SCLAB_ERR_INTERNAL;
  }
  return SCLAB_ERR_INTERNAL;
}

sclab_status fail(sclab_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body and converts exceptions into status codes.
template <typename F>
sclab_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return SCLAB_OK;
  } catch (const sclab::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCLAB_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sclab::SweepOptions to_options(const sclab_sweep_options* o) {
  sclab::SweepOptions out;
  if (o) {
    out.k_max = o->k_max;
    out.include_chi = o->include_chi != 0;
    out.chi_edge_budget = o->chi_edge_budget;
    out.threads = o->threads;
  }
  if (out.k_max < 2) {
    throw sclab::Error(sclab::ErrorCode::kInvalidArgument, "k_max must be >= 2");
  }
  if (out.threads < 0) {
    throw sclab::Error(sclab::ErrorCode::kInvalidArgument,
                       "threads must be >= 0");
  }
  return out;
}

std::map<std::string, int> parse_params(const char* text) {
  std::map<std::string, int> out;
  if (!text) return out;
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    int value = 0;
    const char* end = token.data() + token.size();
    const bool named = eq != std::string::npos && eq > 0;
    const char* begin = named ? token.data() + eq + 1 : end;
    if (!named || begin == end ||
        std::from_chars(begin, end, value).ptr != end) {
      throw sclab::Error(sclab::ErrorCode::kParse,
                         "expected name=value, got '" + token + "'");
    }
    out[token.substr(0, eq)] = value;
  }
  return out;
}

}  // namespace

extern "C" {

const char* sclab_version(void) { return "1.0.0"; }

const char* sclab_status_name(sclab_status status) {
  switch (status) {
    case SCLAB_OK: return "ok";
    case SCLAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SCLAB_ERR_CAPACITY: return "capacity exceeded";
    case SCLAB_ERR_OUT_OF_RANGE: return "out of range";
    case SCLAB_ERR_PARSE: return "parse error";
    case SCLAB_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case SCLAB_ERR_PRECONDITION: return "precondition failed";
    case SCLAB_ERR_INTERNAL: return "internal error";
    case SCLAB_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

const char* sclab_last_error(void) { return last_error.c_str(); }

void sclab_string_free(char* s) { std::free(s); }

sclab_status sclab_graph_parse(const char* text, sclab_graph** out) {
  if (!text || !out) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sclab_graph{sclab::parse_graph_text(text)};
  });
}

sclab_status sclab_graph_from_edges(int n, const int* pairs,
                                    size_t edge_count, sclab_graph** out) {
  if (!out || (!pairs && edge_count > 0)) {
    return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<sclab::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    }
    *out = new sclab_graph{sclab::Graph::build(n, edges)};
  });
}

void sclab_graph_free(sclab_graph* g) { delete g; }

int sclab_graph_order(const sclab_graph* g) {
  return g ? g->graph.order() : -1;
}

int sclab_graph_size(const sclab_graph* g) {
  return g ? g->graph.size() : -1;
}

int sclab_graph_max_degree(const sclab_graph* g) {
  return g ? sclab::max_degree(g->graph) : -1;
}

sclab_status sclab_graph_edge(const sclab_graph* g, int edge_id, int* u,
                              int* v) {
  if (!g || !u || !v) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  if (edge_id < 0 || edge_id >= g->graph.size()) {
    return fail(SCLAB_ERR_OUT_OF_RANGE, "edge id out of range");
  }
  const sclab::Edge& e = g->graph.edge(sclab::EdgeId{edge_id});
  *u = e.u;
  *v = e.v;
  last_error.clear();
  return SCLAB_OK;
}

sclab_status sclab_graph_graph6(const sclab_graph* g, char** out) {
  if (!g || !out) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(sclab::format_graph6(g->graph)); });
}

sclab_status sclab_graph_edge_list(const sclab_graph* g, char** out) {
  if (!g || !out) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = copy_string(sclab::format_edge_list(g->graph)); });
}

sclab_status sclab_strong_clique(const sclab_graph* g, int* value,
                                 int* witness, int* witness_len) {
  if (!g || !value) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const sclab::StrongCliqueResult r = sclab::strong_clique_number(g->graph);
    *value = r.value;
    if (witness) {
      for (int i = 0; i < r.witness.size(); ++i) {
        witness[i] = r.witness.edge_ids[i].index;
      }
    }
    if (witness_len) *witness_len = r.witness.size();
  });
}

sclab_status sclab_strong_chromatic_index(const sclab_graph* g,
                                          int edge_budget, int* value,
                                          int* colours) {
  if (!g || !value) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const sclab::StrongChromaticResult r =
        sclab::strong_chromatic_index(g->graph, edge_budget);
    *value = r.value;
    if (colours) {
      for (std::size_t i = 0; i < r.coloring.color_of.size(); ++i) {
        colours[i] = r.coloring.color_of[i];
      }
    }
  });
}

void sclab_sweep_options_default(sclab_sweep_options* options) {
  if (!options) return;
  const sclab::SweepOptions d;
  options->k_max = d.k_max;
  options->include_chi = d.include_chi ? 1 : 0;
  options->chi_edge_budget = d.chi_edge_budget;
  options->threads = d.threads;
}

sclab_status sclab_profile(const sclab_graph* g, int max_len,
                           sclab_format format, char** out) {
  if (!g || !out) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (max_len < 3) {
      throw sclab::Error(sclab::ErrorCode::kInvalidArgument,
                         "max_len must be >= 3");
    }
    const sclab::CycleProfile p = sclab::cycle_profile(g->graph, max_len);
    *out = copy_string(format == SCLAB_FORMAT_TEXT
                           ? sclab::profile_text(g->graph, p)
                           : sclab::profile_json(g->graph, p));
  });
}

sclab_status sclab_verify(const sclab_graph* g,
                          const sclab_sweep_options* options,
                          sclab_format format, char** out, int* sound) {
  if (!g || !out) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const sclab::GraphRecord r =
        sclab::analyze_graph(g->graph, to_options(options));
    *out = copy_string(format == SCLAB_FORMAT_TEXT ? sclab::record_text(r)
                                                   : sclab::record_json(r));
    if (sound) *sound = r.sound() ? 1 : 0;
  });
}

sclab_status sclab_construct(const char* family, const char* params,
                             sclab_graph** graph, char** spec_json) {
  if (!family || !graph) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    sclab::Construction c = sclab::construct(family, parse_params(params));
    if (spec_json) *spec_json = copy_string(sclab::construction_json(c));
    *graph = new sclab_graph{std::move(c.graph)};
  });
}

sclab_status sclab_sweep_create(sclab_sweep** out) {
  if (!out) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new sclab_sweep; });
}

void sclab_sweep_free(sclab_sweep* s) { delete s; }

sclab_status sclab_sweep_add_graph(sclab_sweep* s, const sclab_graph* g) {
  if (!s || !g) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { s->graphs.push_back(g->graph); });
}

sclab_status sclab_sweep_add_enumerated(sclab_sweep* s, int n) {
  if (!s) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& all = sclab::enumerate_graphs(n);
    s->graphs.insert(s->graphs.end(), all.begin(), all.end());
  });
}

sclab_status sclab_sweep_add_text(sclab_sweep* s, const char* text) {
  if (!s || !text) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::istringstream in{std::string(text)};
    std::vector<sclab::Graph> graphs = sclab::read_graphs(in);
    s->graphs.insert(s->graphs.end(), graphs.begin(), graphs.end());
  });
}

size_t sclab_sweep_count(const sclab_sweep* s) {
  return s ? s->graphs.size() : 0;
}

sclab_status sclab_sweep_run(sclab_sweep* s,
                             const sclab_sweep_options* options,
                             sclab_line_sink sink, void* user, int* sound) {
  if (!s) return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const sclab::SweepReport report =
        sclab::sweep(s->graphs, to_options(options));
    if (sink) {
      for (const sclab::GraphRecord& r : report.records) {
        sink(sclab::record_json(r).c_str(), user);
      }
      sink(sclab::summary_json(report).c_str(), user);
    }
    if (sound) *sound = report.sound() ? 1 : 0;
  });
}

void sclab_hunt_config_default(sclab_hunt_config* config) {
  if (!config) return;
  const sclab::HuntConfig d;
  *config = sclab_hunt_config{};
  config->target = "CONJ4";
  config->k = d.k;
  config->n = d.n;
  config->delta_cap = d.delta_cap;
  config->seed = d.seed;
  config->max_steps = d.max_steps;
  config->restarts = d.restarts;
  config->sideways_budget = d.sideways_budget;
  config->threads = d.threads;
}

sclab_status sclab_hunt(const sclab_hunt_config* config, char** json,
                        sclab_graph** best) {
  if (!config || !config->target || !json) {
    return fail(SCLAB_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    sclab::HuntConfig c = sclab::HuntConfig::for_target(
        config->target, config->k, config->n, config->delta_cap);
    if (config->forbidden) {
      c.forbidden.assign(config->forbidden,
                         config->forbidden + config->forbidden_count);
      c.bipartite = config->bipartite != 0;
    }
    c.seed = config->seed;
    c.max_steps = config->max_steps;
    c.restarts = config->restarts;
    c.sideways_budget = config->sideways_budget;
    c.threads = config->threads;
    if (config->initial && config->inject_construction) {
      throw sclab::Error(sclab::ErrorCode::kInvalidArgument,
                         "initial graph and injected construction conflict");
    }
    if (config->initial) c.initial = config->initial->graph;
    if (config->inject_construction) {
      c.initial = sclab::extremal_seed(c);
      if (!c.initial) {
        throw sclab::Error(sclab::ErrorCode::kInvalidArgument,
                           "no extremal construction for " + c.target +
                               " fits these limits");
      }
    }
    const sclab::HuntResult r = sclab::hunt(c);
    char* line = copy_string(sclab::hunt_json(c, r));
    if (best) *best = new sclab_graph{r.best};
    *json = line;
  });
}

}  // extern "C"
