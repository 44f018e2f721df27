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

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "sclab/constructions.hpp"
#include "sclab/cycles.hpp"
#include "sclab/error.hpp"
#include "sclab/random.hpp"
#include "sclab/search.hpp"

namespace sclab {
namespace {

// Scores for states outside the target's hypothesis sit far below any
// applicable score and rise with the maximum degree, which is what the
// hypotheses at hand usually lack.
constexpr std::int64_t kInapplicable = -1'000'000;
constexpr std::int64_t kDegreeWeight = 1'000;
constexpr int kGreedyPasses = 3;
constexpr int kKickMoves = 3;

void reject(bool bad, const std::string& what) {
  if (bad) throw Error(ErrorCode::kInvalidArgument, what);
}

int hypothesis_param(const BoundSpec& spec, int k) {
  return spec.param == ParamKind::kNone ? 0 : k;
}

// Whether adding uv keeps g bipartite: either the endpoints lie in different
// components or they have different BFS colours.
class Parity {
 public:
  explicit Parity(const Graph& g)
      : component_(g.order(), -1), colour_(g.order(), 0) {
    int next = 0;
    std::vector<int> queue;
    for (int s = 0; s < g.order(); ++s) {
      if (component_[s] >= 0) continue;
      component_[s] = next;
      queue.assign(1, s);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int v = queue[i];
        for (VertexSet r = g.neighbours(v); r != 0; r &= r - 1) {
          const int w = std::countr_zero(r);
          if (component_[w] >= 0) continue;
          component_[w] = next;
          colour_[w] = 1 - colour_[v];
          queue.push_back(w);
        }
      }
      ++next;
    }
  }

  bool may_join(int u, int v) const {
    return component_[u] != component_[v] || colour_[u] != colour_[v];
  }

 private:
  std::vector<int> component_;
  std::vector<int> colour_;
};

bool may_add(const Graph& g, const HuntConfig& config, const Parity* parity,
             int u, int v) {
  if (g.degree(u) >= config.delta_cap || g.degree(v) >= config.delta_cap) {
    return false;
  }
  if (parity && !parity->may_join(u, v)) return false;
  for (int k : config.forbidden) {
    if (closes_cycle(g, u, v, k)) return false;
  }
  return true;
}

struct Evaluation {
  bool applicable = false;
  int omega2 = 0;
  int delta = 0;
  std::int64_t bound_value = 0;
  std::int64_t score = 0;
  StrongCliqueWitness witness;
};

std::int64_t shaped(bool applicable, std::int64_t gap, int delta) {
  return applicable ? gap : gap + kInapplicable + kDegreeWeight * delta;
}

bool better(const Evaluation& a, const Evaluation& b) {
  if (a.applicable != b.applicable) return a.applicable;
  return a.score > b.score;
}

class Climber {
 public:
  Climber(const HuntConfig& config, int restart)
      : config_(config),
        spec_(find_bound(config.target)),
        param_(hypothesis_param(spec_, config.k)),
        restart_(restart),
        rng_(config.seed + static_cast<std::uint64_t>(restart)) {}

  HuntResult run() {
    Graph state = (restart_ == 0 && config_.initial) ? *config_.initial
                                                     : random_state();
    Evaluation current = evaluate(state, true);
    HuntResult result = record(state, current, 0);
    int sideways = config_.sideways_budget;
    std::int64_t step = 0;
    while (step < config_.max_steps) {
      const std::vector<Edge> moves = legal_moves(state);
      if (moves.empty()) break;
      std::vector<std::pair<Graph, Evaluation>> top;
      for (const Edge& e : moves) {
        Graph next = state.with_edge_toggled(e.u, e.v);
        Evaluation ev = evaluate(next, false);
        if (top.empty() || better(ev, top.front().second)) {
          top.clear();
          top.emplace_back(std::move(next), std::move(ev));
        } else if (!better(top.front().second, ev)) {
          top.emplace_back(std::move(next), std::move(ev));
        }
      }
      const bool improves = better(top.front().second, current);
      const bool level = !improves && !better(current, top.front().second);
      if (improves || (level && sideways > 0)) {
        if (!improves) --sideways;
        state = std::move(top[rng_.below(top.size())].first);
        ++step;
      } else {
        // Stuck on a local optimum: a few random legal toggles.
        for (int i = 0; i < kKickMoves && step < config_.max_steps; ++i) {
          const std::vector<Edge> any = legal_moves(state);
          if (any.empty()) break;
          const Edge e = any[rng_.below(any.size())];
          state = state.with_edge_toggled(e.u, e.v);
          ++step;
        }
        sideways = config_.sideways_budget;
      }
      current = evaluate(state, true);
      if (better(current, evaluate_result(result))) {
        result = record(state, current, step);
      }
    }
    result.steps_taken = step;
    return result;
  }

 private:
  Graph random_state() {
    const Edge none[] = {{0, 0}};
    Graph g = Graph::build(config_.n, std::span<const Edge>(none, 0));
    std::vector<Edge> pairs;
    for (int v = 1; v < config_.n; ++v) {
      for (int u = 0; u < v; ++u) pairs.push_back({u, v});
    }
    rng_.shuffle(std::span<Edge>(pairs));
    for (const Edge& e : pairs) {
      if (!rng_.coin()) continue;
      const Parity parity(g);
      if (may_add(g, config_, config_.bipartite ? &parity : nullptr, e.u,
                  e.v)) {
        g = g.with_edge_toggled(e.u, e.v);
      }
    }
    return g;
  }

  std::vector<Edge> legal_moves(const Graph& g) const {
    std::optional<Parity> parity;
    if (config_.bipartite) parity.emplace(g);
    std::vector<Edge> out;
    for (int v = 1; v < g.order(); ++v) {
      for (int u = 0; u < v; ++u) {
        if (g.adjacent(u, v) ||
            may_add(g, config_, parity ? &*parity : nullptr, u, v)) {
          out.push_back({u, v});
        }
      }
    }
    return out;
  }

  // Exact evaluations feed the best-state record. Screening evaluations use
  // greedy cliques unless the greedy value comes within two of the bound.
  Evaluation evaluate(const Graph& g, bool exact) {
    Evaluation ev;
    const GraphFacts facts = GraphFacts::of(g, std::max(config_.k, 2));
    ev.delta = facts.delta;
    ev.applicable = facts.edges > 0 && spec_.applies(facts, param_);
    ev.bound_value = spec_.value(facts.delta, facts.sigma.value_or(0), param_)
                         .floor();
    if (exact) {
      StrongCliqueResult r = strong_clique_number(g);
      ev.omega2 = r.value;
      ev.witness = std::move(r.witness);
    } else {
      for (int i = 0; i < kGreedyPasses; ++i) {
        ev.omega2 = std::max(ev.omega2,
                             greedy_strong_clique(g, rng_.next()).size());
      }
      if (ev.omega2 >= ev.bound_value - 2) {
        ev.omega2 = strong_clique_number(g).value;
      }
    }
    ev.score = shaped(ev.applicable, ev.omega2 - ev.bound_value, ev.delta);
    return ev;
  }

  Evaluation evaluate_result(const HuntResult& r) const {
    Evaluation ev;
    ev.applicable = r.applicable;
    ev.score = shaped(r.applicable, r.gap, r.delta);
    return ev;
  }

  HuntResult record(const Graph& g, const Evaluation& ev,
                    std::int64_t step) const {
    HuntResult r;
    r.best = g;
    r.applicable = ev.applicable;
    r.omega2 = ev.omega2;
    r.witness = ev.witness;
    r.delta = ev.delta;
    r.bound_value = ev.bound_value;
    r.gap = ev.omega2 - ev.bound_value;
    r.restart = restart_;
    r.step = step;
    return r;
  }

  const HuntConfig& config_;
  const BoundSpec& spec_;
  int param_;
  int restart_;
  Rng rng_;
};

}  // namespace

HuntConfig HuntConfig::for_target(const std::string& target, int k, int n,
                                  int delta_cap) {
  HuntConfig c;
  c.target = target;
  c.k = k;
  c.n = n;
  c.delta_cap = delta_cap;
  if (target == "T2.1") {
    c.forbidden = {3};
  } else if (target == "T2.2" || target == "T7") {
    c.forbidden = {5};
  } else if (target == "T2.3") {
    c.forbidden = {2 * k + 1};
  } else if (target == "T3.1") {
    c.forbidden = {4};
  } else if (target == "T3.3") {
    c.forbidden = {2 * k, 2 * k + 1, 2 * k + 2};
  } else if (target == "T5.2") {
    c.forbidden = {k - 1, k, k + 1};
  } else if (target == "T9") {
    c.forbidden = {3, 5, 2 * k, 2 * k + 2};
  } else if (target == "T13") {
    c.forbidden = {2 * k, 2 * k + 2};
    c.bipartite = true;
  } else if (target == "CONJ5") {
    c.forbidden = {2 * k};
    c.bipartite = true;
  } else if (target != "T5.1") {
    c.forbidden = {2 * k};
  }
  std::sort(c.forbidden.begin(), c.forbidden.end());
  c.forbidden.erase(std::unique(c.forbidden.begin(), c.forbidden.end()),
                    c.forbidden.end());
  return c;
}

void validate(const HuntConfig& config) {
  const BoundSpec& spec = find_bound(config.target);
  reject(spec.target != BoundTarget::kOmega2,
         "target " + config.target + " bounds chi_2'; hunts need omega_2'");
  reject(spec.param != ParamKind::kNone && config.k < spec.param_min,
         "k must be at least " + std::to_string(spec.param_min));
  reject(config.n < 2 || config.n > kMaxVertices, "n must lie in [2, 64]");
  reject(config.delta_cap < 1 || config.delta_cap > config.n - 1,
         "delta_cap must lie in [1, n - 1]");
  reject(config.n * config.delta_cap > 2 * kMaxVertices,
         "n * delta_cap / 2 may exceed the 64-edge solver capacity");
  for (int k : config.forbidden) {
    reject(k < 3, "forbidden cycle lengths must be at least 3");
  }
  reject(config.max_steps < 0, "max_steps must be nonnegative");
  reject(config.restarts < 0, "restarts must be nonnegative");
  reject(config.sideways_budget < 0, "sideways_budget must be nonnegative");
  reject(config.threads < 0, "threads must be nonnegative");
  if (config.initial) {
    reject(config.initial->order() != config.n,
           "initial graph must have n vertices");
    reject(!satisfies_constraints(*config.initial, config),
           "initial graph violates the hunt constraints");
  }
}

bool satisfies_constraints(const Graph& g, const HuntConfig& config) {
  if (max_degree(g) > config.delta_cap) return false;
  if (config.bipartite && !is_bipartite(g)) return false;
  for (int k : config.forbidden) {
    if (k <= g.order() && contains_cycle(g, k)) return false;
  }
  return true;
}

std::optional<Graph> extremal_seed(const HuntConfig& config) {
  for (int d = config.delta_cap; d >= 1; --d) {
    std::optional<Construction> c;
    try {
      if (config.target == "CONJ4") {
        c = hairy_clique(2 * config.k - 1, d);
      } else if (config.target == "CONJ5") {
        c = bip_pendant_construction(config.k, d);
      } else {
        return std::nullopt;
      }
    } catch (const Error&) {
      continue;
    }
    if (c->graph.order() > config.n) continue;
    std::vector<VertexSet> rows(c->graph.rows().begin(),
                                c->graph.rows().end());
    rows.resize(config.n, 0);
    Graph padded = Graph::from_rows(rows);
    if (satisfies_constraints(padded, config)) return padded;
  }
  return std::nullopt;
}

HuntResult hunt(const HuntConfig& config) {
  validate(config);
  const int runs = config.restarts + 1;
  std::vector<std::optional<HuntResult>> results(runs);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const int r = next.fetch_add(1);
      if (r >= runs) return;
      try {
        results[r] = Climber(config, r).run();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = runs;
        return;
      }
    }
  };
  int workers = config.threads == 0
                    ? static_cast<int>(std::max(1U, std::thread::hardware_concurrency()))
                    : config.threads;
  workers = std::min(workers, runs);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::int64_t total = 0;
  std::optional<HuntResult> best;
  for (auto& r : results) {
    total += r->steps_taken;
    if (!best || (r->applicable && !best->applicable) ||
        (r->applicable == best->applicable &&
         shaped(r->applicable, r->gap, r->delta) >
             shaped(best->applicable, best->gap, best->delta))) {
      best = std::move(r);
    }
  }
  best->steps_taken = total;
  return *best;
}

}  // namespace sclab
