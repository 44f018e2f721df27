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

#include "sclab/report.hpp"

#include <json.hpp>
#include <sstream>

#include "sclab/io.hpp"

namespace sclab {
namespace {

using nlohmann::json;

json optional_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

json edge_ids(const Graph& g, const std::vector<EdgeId>& ids) {
  json out = json::array();
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    out.push_back({e.u, e.v});
  }
  return out;
}

json check_object(const BoundCheck& c) {
  json params = json::object();
  if (c.param_kind != ParamKind::kNone) {
    params[std::string(param_name(c.param_kind))] = c.param;
  }
  return {{"spec", c.spec_id},
          {"params", params},
          {"conjecture", c.conjecture},
          {"target", c.target == BoundTarget::kOmega2 ? "omega2" : "chi2"},
          {"applicable", c.applicable},
          {"measured", c.measured},
          {"bound", c.bound_value},
          {"bound_exact", {c.bound.num, c.bound.den}},
          {"holds", c.holds},
          {"tight", c.tight}};
}

json profile_object(const CycleProfile& p) {
  json cycles = json::array();
  for (int k = 3; k <= p.max_len; ++k) {
    if (p.cycle_flags[k]) cycles.push_back(k);
  }
  int longest = std::min(1, p.vertex_count);
  for (int q = 2; q < static_cast<int>(p.path_flags.size()); ++q) {
    if (p.path_flags[q]) longest = q;
  }
  return {{"max_len", p.max_len},
          {"cycle_lengths", cycles},
          {"longest_path", longest},
          {"girth", optional_int(p.girth)}};
}

std::string line(json j) { return j.dump(); }

}  // namespace

std::string check_json(const BoundCheck& check) {
  json j = check_object(check);
  j["schema"] = kReportSchema;
  j["type"] = "check";
  return line(j);
}

std::string profile_json(const Graph& g, const CycleProfile& profile) {
  json j = profile_object(profile);
  j["schema"] = kReportSchema;
  j["type"] = "profile";
  j["graph6"] = format_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  return line(j);
}

std::string record_json(const GraphRecord& r) {
  json j = {{"schema", kReportSchema},
            {"type", "graph"},
            {"graph6", r.graph6},
            {"n", r.n},
            {"m", r.m}};
  if (!r.skipped.empty()) {
    j["skipped"] = r.skipped;
    return line(j);
  }
  j["delta"] = r.delta;
  j["sigma"] = optional_int(r.sigma);
  j["profile"] = {{"cycle_lengths", r.cycle_lengths},
                  {"longest_path", r.longest_path},
                  {"girth", optional_int(r.girth)},
                  {"bipartite", r.bipartite}};
  j["omega2"] = r.omega2;
  const Graph g = parse_graph6(r.graph6);
  j["witness"] = edge_ids(g, r.witness);
  j["chi2"] = optional_int(r.chi2);
  if (!r.chi_note.empty()) j["chi2_note"] = r.chi_note;
  json checks = json::array();
  for (const BoundCheck& c : r.checks) checks.push_back(check_object(c));
  if (r.lemma8) checks.push_back(check_object(*r.lemma8));
  j["checks"] = checks;
  if (r.h_path) {
    j["h_path"] = {{"order", r.h_path->order},
                   {"required", r.h_path->required},
                   {"steps", r.h_path->steps},
                   {"ok", r.h_path->ok}};
    if (!r.h_path->error.empty()) j["h_path"]["error"] = r.h_path->error;
  }
  if (r.reduction) {
    j["reduction"] = {{"core_order", r.reduction->core_order},
                      {"bipartite", r.reduction->bipartite},
                      {"core_omega2", r.reduction->core_omega2},
                      {"ok", r.reduction->ok}};
  }
  j["sound"] = r.sound();
  return line(j);
}

std::string summary_json(const SweepReport& report) {
  json tallies = json::object();
  for (const auto& [key, t] : report.tallies) {
    tallies[key] = {{"applicable", t.applicable},
                    {"holds", t.holds},
                    {"tight", t.tight},
                    {"violations", t.violations}};
  }
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"graph6", v.graph6}, {"check", check_object(v.check)}});
  }
  return line({{"schema", kReportSchema},
               {"type", "summary"},
               {"graphs_processed", report.graphs_processed},
               {"graphs_skipped", report.graphs_skipped},
               {"tallies", tallies},
               {"violations", violations},
               {"tight_examples", report.tight_examples},
               {"structural_failures", report.structural_failures},
               {"sound", report.sound()}});
}

std::string hunt_json(const HuntConfig& config, const HuntResult& r) {
  json cfg = {{"target", config.target},
              {"k", config.k},
              {"n", config.n},
              {"delta_cap", config.delta_cap},
              {"forbidden", config.forbidden},
              {"bipartite", config.bipartite},
              {"seed", config.seed},
              {"max_steps", config.max_steps},
              {"restarts", config.restarts},
              {"sideways_budget", config.sideways_budget},
              {"initial", config.initial ? json(format_graph6(*config.initial))
                                         : json(nullptr)}};
  return line({{"schema", kReportSchema},
               {"type", "hunt"},
               {"config", cfg},
               {"graph6", format_graph6(r.best)},
               {"n", r.best.order()},
               {"m", r.best.size()},
               {"applicable", r.applicable},
               {"omega2", r.omega2},
               {"witness", edge_ids(r.best, r.witness.edge_ids)},
               {"delta", r.delta},
               {"bound", r.bound_value},
               {"gap", r.gap},
               {"restart", r.restart},
               {"step", r.step},
               {"steps_taken", r.steps_taken}});
}

std::string construction_json(const Construction& c) {
  return line({{"schema", kReportSchema},
               {"type", "construction"},
               {"family", std::string(family_name(c.spec.family))},
               {"parameters", c.spec.parameters},
               {"graph6", format_graph6(c.graph)},
               {"n", c.graph.order()},
               {"m", c.graph.size()},
               {"expected_omega2", c.spec.expected_strong_clique},
               {"expected_delta", c.spec.expected_max_degree}});
}

std::string check_text(const BoundCheck& c) {
  std::ostringstream out;
  out << tally_key(c) << ": ";
  if (!c.applicable) {
    out << "not applicable";
    return out.str();
  }
  out << (c.holds ? "holds" : "VIOLATED");
  if (c.tight) out << ", tight";
  out << ", " << c.measured << (c.holds ? " \u2264 " : " > ");
  if (c.bound.den == 1) {
    out << c.bound.num;
  } else {
    out << c.bound.num << "/" << c.bound.den << " (" << c.bound_value << ")";
  }
  if (c.conjecture) out << " [conjecture]";
  return out.str();
}

std::string profile_text(const Graph& g, const CycleProfile& p) {
  std::ostringstream out;
  out << "graph6 " << format_graph6(g) << "\n";
  out << "n = " << g.order() << ", m = " << g.size() << "\n";
  out << "girth = ";
  if (p.girth) {
    out << *p.girth;
  } else {
    out << "none";
  }
  out << "\ncycles (3.." << p.max_len << "):";
  for (int k = 3; k <= p.max_len; ++k) {
    out << " C" << k << (p.cycle_flags[k] ? "+" : "-");
  }
  out << "\npaths (2.." << p.path_flags.size() - 1 << "):";
  for (std::size_t q = 2; q < p.path_flags.size(); ++q) {
    out << " P" << q << (p.path_flags[q] ? "+" : "-");
  }
  out << "\n";
  return out.str();
}

std::string record_text(const GraphRecord& r) {
  std::ostringstream out;
  out << "graph6 " << r.graph6 << ": n = " << r.n << ", m = " << r.m;
  if (!r.skipped.empty()) {
    out << "\nskipped: " << r.skipped << "\n";
    return out.str();
  }
  out << ", Delta = " << r.delta << ", omega2' = " << r.omega2;
  if (r.chi2) out << ", chi2' = " << *r.chi2;
  out << "\n";
  int applicable = 0;
  int tight = 0;
  int violated = 0;
  std::vector<const BoundCheck*> all;
  for (const BoundCheck& c : r.checks) all.push_back(&c);
  if (r.lemma8) all.push_back(&*r.lemma8);
  for (const BoundCheck* c : all) {
    if (!c->applicable) continue;
    ++applicable;
    if (c->tight) ++tight;
    if (!c->holds) ++violated;
    out << check_text(*c) << "\n";
  }
  if (!r.chi_note.empty()) out << "chi2' not computed: " << r.chi_note << "\n";
  out << applicable << " applicable, " << tight << " tight, " << violated
      << " violated\n";
  return out.str();
}

}  // namespace sclab
