#pragma once

// JSON views of reports. Field names used by `analyze` are a stable contract:
// new fields may be added, existing ones are never renamed.

#include <json.hpp>

#include "nbrecon/antiauto.hpp"
#include "nbrecon/decide.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/iso.hpp"
#include "nbrecon/verify.hpp"

namespace nbrecon {

using Json = nlohmann::ordered_json;

inline Json to_json(const Permutation& p) { return p.images(); }

inline Json edges_json(const Graph& g) {
  Json out = Json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

inline Json to_json(const AntiWitness& w) {
  return {{"alpha", to_json(w.alpha)}, {"g_alpha_edges", edges_json(w.g_alpha)}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

inline Json to_json(const AnalysisReport& r, const Graph& g) {
  Json census = Json::array();
  for (std::size_t i = 0; i < r.census.representatives.size(); ++i) {
    census.push_back({{"alpha", to_json(r.census.representatives[i])},
                      {"certificate", r.census.certificates[i].hex()}});
  }
  return {
      {"n", r.n},
      {"reconstructible", r.reconstructible},
      {"strongly", r.strongly},
      {"cancellation", r.cancellation},
      {"bipartite", r.bipartite},
      {"has_involution", r.has_involution},
      {"orbit_count", r.census.orbit_count},
      {"counterexample", optional_json(r.counterexample)},
      {"witness_involution", optional_json(r.witness_involution)},
      {"route", to_string(r.route)},
      {"strong_counterexample", optional_json(r.strong_counterexample)},
      {"involution", optional_json(r.involution)},
      {"certificate", canonical_form(g).hex()},
      {"orbit_source", r.census.from_two_fold_action ? "two_fold_action" : "twist_certificates"},
      {"orbit_representatives", census},
  };
}

inline Json to_json(const TwoFoldPair& p) { return {{"lambda", to_json(p.lambda)}, {"mu", to_json(p.mu)}}; }

inline Json to_json(const VerificationReport& r) {
  Json census = Json::array();
  for (const CensusRow& c : r.census) {
    census.push_back({{"suite", c.suite},
                      {"n", c.n},
                      {"loops", c.loops},
                      {"graphs", c.graphs},
                      {"non_reconstructible", c.non_reconstructible},
                      {"non_strongly", c.non_strongly},
                      {"bipartite", c.bipartite},
                      {"bipartite_failures", c.bipartite_failures}});
  }
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(
        {{"check", v.check}, {"n", v.n}, {"index", v.index}, {"graph", v.graph}, {"detail", v.detail}});
  }
  Json timings = Json::array();
  for (const SuiteTiming& t : r.timings) timings.push_back({{"suite", t.suite}, {"seconds", t.seconds}});
  Json checks = Json::object();
  for (const auto& [name, count] : r.checks) checks[name] = count;
  return {{"ok", r.ok()},
          {"max_n", r.max_n},
          {"loops", r.loops},
          {"jobs", r.jobs},
          {"bipartite_max_n", r.bipartite_max_n},
          {"violation_count", r.violation_count},
          {"violations", violations},
          {"census", census},
          {"checks", checks},
          {"timings", timings},
          {"oracle_basis", r.oracle_basis}};
}

}  // namespace nbrecon
