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
#include <mutex>
#include <thread>

#include "sclab/error.hpp"
#include "sclab/io.hpp"
#include "sclab/reduction.hpp"
#include "sclab/search.hpp"

namespace sclab {
namespace {

int worker_count(int requested, std::size_t jobs) {
  int n = requested;
  if (n <= 0) n = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

bool GraphRecord::sound() const {
  for (const BoundCheck& c : checks) {
    if (!c.conjecture && !c.holds) return false;
  }
  if (lemma8 && !lemma8->holds) return false;
  if (h_path && !h_path->ok) return false;
  if (reduction && !reduction->ok) return false;
  return true;
}

GraphRecord analyze_graph(const Graph& g, const SweepOptions& options) {
  GraphRecord r;
  r.graph6 = format_graph6(g);
  r.n = g.order();
  r.m = g.size();
  const GraphFacts facts = GraphFacts::of(g, options.k_max);
  r.delta = facts.delta;
  r.sigma = facts.sigma;
  r.girth = facts.profile.girth;
  r.bipartite = facts.bipartite;
  for (int k = 3; k <= facts.profile.max_len; ++k) {
    if (facts.profile.cycle_flags[k]) r.cycle_lengths.push_back(k);
  }
  r.longest_path = std::min(1, r.n);
  for (int p = 2; p < static_cast<int>(facts.profile.path_flags.size()); ++p) {
    if (facts.profile.path_flags[p]) r.longest_path = p;
  }

  StrongCliqueResult omega;
  try {
    omega = strong_clique_number(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapacity) throw;
    r.skipped = e.what();
    return r;
  }
  r.omega2 = omega.value;
  r.witness = omega.witness.edge_ids;

  if (options.include_chi) {
    if (r.m > options.chi_edge_budget) {
      r.chi_note = "edge budget " + std::to_string(options.chi_edge_budget) +
                   " exceeded";
    } else {
      try {
        r.chi2 = strong_chromatic_index(g, options.chi_edge_budget).value;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        r.chi_note = e.what();
      }
    }
  }

  r.checks = check_all(facts, r.omega2, r.chi2, options.k_max);
  if (r.m > 0) r.lemma8 = check_lemma8(g, facts, omega.witness);

  if (r.m > 0 && r.omega2 > r.delta) {
    HPathSummary s;
    try {
      const HSidedPathResult p = find_h_sided_path(g, omega.witness);
      s.order = p.path.order();
      s.required = p.required_order;
      s.steps = static_cast<int>(p.trace.size()) - 1;
      s.ok = s.order >= s.required;
    } catch (const Error& e) {
      s.error = e.what();
    }
    r.h_path = s;
  }

  if (r.m > 0 && !facts.profile.has_cycle(3) && !facts.profile.has_cycle(5)) {
    const ReductionResult red = bipartite_reduction(g, omega.witness);
    ReductionSummary s;
    s.core_order = red.core.order();
    s.bipartite = is_bipartite(red.core);
    s.core_omega2 = strong_clique_number(red.core).value;
    s.ok = s.bipartite && s.core_omega2 == r.omega2;
    r.reduction = s;
  }
  return r;
}

std::string tally_key(const BoundCheck& check) {
  std::string key = check.spec_id;
  if (check.param_kind != ParamKind::kNone) {
    key += "[" + std::string(param_name(check.param_kind)) + "=" +
           std::to_string(check.param) + "]";
  }
  return key;
}

bool SweepReport::sound() const {
  for (const Violation& v : violations) {
    if (!v.check.conjecture) return false;
  }
  return structural_failures.empty();
}

SweepReport sweep(std::span<const Graph> graphs, const SweepOptions& options) {
  std::vector<GraphRecord> records(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        records[i] = analyze_graph(graphs[i], options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
        return;
      }
    }
  };
  const int workers = worker_count(options.threads, graphs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport report;
  for (GraphRecord& r : records) {
    if (!r.skipped.empty()) {
      ++report.graphs_skipped;
      report.records.push_back(std::move(r));
      continue;
    }
    ++report.graphs_processed;
    std::vector<const BoundCheck*> all;
    for (const BoundCheck& c : r.checks) all.push_back(&c);
    if (r.lemma8) all.push_back(&*r.lemma8);
    for (const BoundCheck* c : all) {
      if (!c->applicable) continue;
      const std::string key = tally_key(*c);
      Tally& t = report.tallies[key];
      ++t.applicable;
      if (c->holds) ++t.holds;
      if (c->tight) {
        ++t.tight;
        report.tight_examples.emplace(key, r.graph6);
      }
      if (!c->holds) {
        ++t.violations;
        report.violations.push_back({r.graph6, *c});
      }
    }
    if (r.h_path && !r.h_path->ok) {
      report.structural_failures.push_back(
          r.graph6 + ": H-sided path " +
          (r.h_path->error.empty() ? "too short" : r.h_path->error));
    }
    if (r.reduction && !r.reduction->ok) {
      report.structural_failures.push_back(r.graph6 +
                                           ": bipartite reduction failed");
    }
    report.records.push_back(std::move(r));
  }
  return report;
}

}  // namespace sclab
