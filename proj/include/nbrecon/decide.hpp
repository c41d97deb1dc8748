#pragma once

// Deciders for neighborhood reconstruction and direct-product cancellation.
//
// A graph is neighborhood-reconstructible exactly when G^a ≅ G for every
// anti-automorphism a, and this is also exactly when it is a cancellation
// graph. The general decider scans Ant(G) and may first take three shortcuts,
// each switchable so they can be tested against the plain scan:
//
//   1. no involution in Aut(G)        -> reconstructible
//   2. G bipartite                    -> reconstructible iff no involution
//                                        swaps the two sides of a component
//   3. orbit reduction                -> one anti-automorphism per
//                                        Aut^TF(G)-orbit (n <= 6), otherwise
//                                        the odd-part power a^m with
//                                        ord(a) = 2^k m, deduplicated

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nbrecon/antiauto.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/iso.hpp"
#include "nbrecon/product.hpp"

namespace nbrecon {

struct DecideOptions {
  bool involution_shortcut = true;
  bool bipartite_shortcut = true;
  bool orbit_reduction = true;
  Budget budget{};

  static DecideOptions plain_scan(Budget budget = {}) { return {false, false, false, budget}; }
};

enum class DecisionRoute { no_involution, bipartite, anti_scan };

inline const char* to_string(DecisionRoute r) {
  switch (r) {
    case DecisionRoute::no_involution: return "no_involution";
    case DecisionRoute::bipartite: return "bipartite";
    case DecisionRoute::anti_scan: return "anti_scan";
  }
  return "?";
}

/// An anti-automorphism together with the graph it produces.
struct AntiWitness {
  Permutation alpha;
  Graph g_alpha;
};

struct ReconstructionResult {
  bool reconstructible = true;
  DecisionRoute route = DecisionRoute::anti_scan;
  std::optional<AntiWitness> counterexample;  // G^alpha not isomorphic to G
};

/// Number of loops G^a would carry: one at a(y) for each y with a(y) ∈ N(y).
inline int twisted_loop_count(const Graph& g, const Permutation& a) {
  int count = 0;
  for (int y = 0; y < g.order(); ++y) count += g.adjacent(y, a(y)) ? 1 : 0;
  return count;
}

namespace detail {

// Counterexamples are ranked by the loops they create, then lexicographically.
// Loop-free twists of loop-free graphs are the classical witnesses.
inline bool better_witness(const Graph& g, const Permutation& candidate, const std::optional<Permutation>& incumbent) {
  if (!incumbent) return true;
  const int lc = twisted_loop_count(g, candidate);
  const int li = twisted_loop_count(g, *incumbent);
  return lc != li ? lc < li : candidate < *incumbent;
}

inline std::uint64_t odd_part(std::uint64_t m) {
  while (m != 0 && (m & 1U) == 0) m >>= 1U;
  return m;
}

}  // namespace detail

/// Involutions of G that map X_i onto Y_i for the part `part` and fix every
/// vertex outside it, in lexicographic order.
inline std::vector<Permutation> reversing_involutions(const Graph& g, const Bipartition& bip, std::size_t part) {
  std::vector<Permutation> out;
  const auto& p = bip.parts.at(part);
  if (set_size(p.x) != set_size(p.y) || p.y == 0) return out;
  std::vector<VertexSet> allowed(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    allowed[static_cast<std::size_t>(v)] = contains(p.x, v) ? p.y : contains(p.y, v) ? p.x : singleton(v);
  }
  detail::for_each_isomorphism(g, g, allowed, [&](const Permutation& sigma) {
    if (compose(sigma, sigma).is_identity()) out.push_back(sigma);
    return true;
  });
  return out;
}

/// Builds the involution that is a^k on X_i, a^-k on Y_i and the identity
/// elsewhere, given a ∈ Ant(G) with a^k(X_i) = Y_i.
inline Permutation involution_from_anti_power(const Graph& g, const Bipartition& bip, std::size_t part,
                                              const Permutation& a, long long k) {
  if (!is_anti_automorphism(g, a)) throw UsageError("permutation is not an anti-automorphism");
  const auto& p = bip.parts.at(part);
  const Permutation forward = a.pow(k);
  const Permutation backward = a.pow(-k);
  if (forward.apply(p.x) != p.y) throw UsageError("a^k does not carry X_i onto Y_i");
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    images[static_cast<std::size_t>(v)] = contains(p.x, v) ? forward(v) : contains(p.y, v) ? backward(v) : v;
  }
  Permutation sigma = Permutation::from_images(images);
  if (!is_isomorphism(g, g, sigma) || !is_involution(sigma)) {
    throw InvariantViolation("constructed map is not an involution of the graph");
  }
  return sigma;
}

struct BipartiteDecision {
  bool cancellation = true;
  std::optional<Permutation> witness;  // reverses one component's bipartition
  int part = -1;
};

/// For bipartite G: a cancellation graph iff no involution reverses the
/// bipartition of a component. Throws UsageError for non-bipartite input.
inline BipartiteDecision bipartite_cancellation_decider(const Graph& g) {
  const Bipartition bip = bipartition(g);
  if (!bip.bipartite) throw UsageError("bipartite decider called on a non-bipartite graph");
  BipartiteDecision d;
  for (std::size_t i = 0; i < bip.parts.size(); ++i) {
    for (const Permutation& sigma : reversing_involutions(g, bip, i)) {
      if (detail::better_witness(g, sigma, d.witness)) {
        d.witness = sigma;
        d.part = static_cast<int>(i);
      }
    }
  }
  d.cancellation = !d.witness.has_value();
  return d;
}

/// Candidates the anti-scan has to test under orbit reduction.
inline std::vector<Permutation> reduced_anti_candidates(const Graph& g, Budget budget) {
  std::vector<Permutation> out;
  if (g.order() <= 6) {
    const AntOrbitPartition orbits = ant_orbits(g, budget);
    for (std::size_t rep : orbits.representatives) out.push_back(orbits.ant[rep]);
    return out;
  }
  std::unordered_set<Permutation> seen;
  for (const Permutation& a : enumerate_ant(g, budget)) {
    Permutation r = a.pow(static_cast<long long>(detail::odd_part(a.order())));
    if (seen.insert(r).second) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ReconstructionResult is_neighborhood_reconstructible(const Graph& g, const DecideOptions& options = {}) {
  const Budget budget = options.budget;
  budget.require(g.order() <= 8, "reconstruction decider is limited to 8 vertices by default");
  ReconstructionResult result;

  if (options.involution_shortcut && !has_involution(g, budget)) {
    result.route = DecisionRoute::no_involution;
    return result;
  }
  if (options.bipartite_shortcut && is_bipartite(g)) {
    result.route = DecisionRoute::bipartite;
    const BipartiteDecision d = bipartite_cancellation_decider(g);
    result.reconstructible = d.cancellation;
    if (d.witness) result.counterexample = AntiWitness{*d.witness, apply_anti(g, *d.witness)};
    return result;
  }

  result.route = DecisionRoute::anti_scan;
  const std::vector<Permutation> candidates =
      options.orbit_reduction ? reduced_anti_candidates(g, budget) : enumerate_ant(g, budget);
  const Certificate base = canonical_form(g);

  std::unordered_map<std::string, bool> isomorphic_to_base;  // keyed by labeled rows
  std::optional<Permutation> worst;
  for (const Permutation& a : candidates) {
    const Graph twisted = permuted_digraph(g, a).to_graph();
    std::string key(reinterpret_cast<const char*>(twisted.rows().data()), twisted.rows().size_bytes());
    auto it = isomorphic_to_base.find(key);
    if (it == isomorphic_to_base.end()) {
      it = isomorphic_to_base.emplace(std::move(key), canonical_form(twisted) == base).first;
    }
    if (!it->second && detail::better_witness(g, a, worst)) worst = a;
  }
  if (worst) {
    result.reconstructible = false;
    result.counterexample = AntiWitness{*worst, apply_anti(g, *worst)};
  }
  return result;
}

/// Cancellation graphs coincide with neighborhood-reconstructible graphs.
inline ReconstructionResult is_cancellation_graph(const Graph& g, const DecideOptions& options = {}) {
  return is_neighborhood_reconstructible(g, options);
}

struct StrongResult {
  bool strongly = true;
  std::optional<AntiWitness> witness;  // G^alpha != G (labeled)
};

/// G^a = G for every a ∈ Ant(G). Recomputed a second way: Ant(G) must be
/// exactly the permutations that fix every class of equal neighborhoods.
inline StrongResult is_strongly_reconstructible(const Graph& g, Budget budget = {}) {
  const std::vector<Permutation> ants = enumerate_ant(g, budget);
  StrongResult result;
  for (const Permutation& a : ants) {
    Graph twisted = apply_anti(g, a);
    if (twisted != g) {
      result.strongly = false;
      result.witness = AntiWitness{a, std::move(twisted)};
      break;
    }
  }

  const RPartition classes = r_partition(g);
  bool all_preserve = true;
  for (const Permutation& a : ants) {
    for (VertexSet c : classes.classes) all_preserve = all_preserve && a.apply(c) == c;
  }
  std::uint64_t class_preserving = 1;
  for (VertexSet c : classes.classes) {
    for (int i = 2; i <= set_size(c); ++i) class_preserving *= static_cast<std::uint64_t>(i);
  }
  const bool by_classes = all_preserve && ants.size() == class_preserving;
  if (by_classes != result.strongly) {
    throw InvariantViolation("strong reconstructibility: twist equality and class preservation disagree");
  }
  return result;
}

struct OrbitCensus {
  std::size_t orbit_count = 0;
  std::vector<Permutation> representatives;  // lexicographically least per orbit
  std::vector<Certificate> certificates;     // of G^rep, parallel to representatives
  bool from_two_fold_action = false;         // false: grouped by certificate instead
};

/// Orbits of Aut^TF(G) on Ant(G) when n <= 6, cross-checked against the
/// isomorphism classes of the G^a; larger graphs get the classes alone.
inline OrbitCensus orbit_census(const Graph& g, Budget budget = {}) {
  OrbitCensus census;
  const std::vector<Permutation> ants = enumerate_ant(g, budget);
  std::unordered_map<std::string, std::size_t> class_index;
  std::vector<Permutation> class_reps;
  std::vector<Certificate> class_certs;
  for (const Permutation& a : ants) {
    Certificate c = canonical_form(apply_anti(g, a));
    if (class_index.emplace(c.key(), class_reps.size()).second) {
      class_reps.push_back(a);
      class_certs.push_back(std::move(c));
    }
  }

  if (g.order() <= 6 || budget.unbounded) {
    const AntOrbitPartition orbits = ant_orbits(g, budget);
    if (orbits.orbit_count() != class_reps.size()) {
      throw InvariantViolation("orbit count differs from the number of isomorphism classes of twists");
    }
    census.from_two_fold_action = true;
    census.orbit_count = orbits.orbit_count();
    for (std::size_t rep : orbits.representatives) {
      census.representatives.push_back(orbits.ant[rep]);
      census.certificates.push_back(canonical_form(apply_anti(g, orbits.ant[rep])));
    }
    return census;
  }
  census.orbit_count = class_reps.size();
  census.representatives = std::move(class_reps);
  census.certificates = std::move(class_certs);
  return census;
}

struct AnalysisReport {
  int n = 0;
  bool reconstructible = true;
  bool strongly = true;
  bool cancellation = true;
  bool bipartite = false;
  bool has_involution = false;
  DecisionRoute route = DecisionRoute::anti_scan;
  std::optional<AntiWitness> counterexample;         // present iff !reconstructible
  std::optional<AntiWitness> strong_counterexample;  // present iff !strongly
  std::optional<Permutation> witness_involution;     // present iff bipartite && !reconstructible
  std::optional<Permutation> involution;             // present iff has_involution
  OrbitCensus census;
};

inline AnalysisReport classify(const Graph& g, Budget budget = {}) {
  AnalysisReport r;
  r.n = g.order();
  DecideOptions options;
  options.budget = budget;
  const ReconstructionResult rec = is_cancellation_graph(g, options);
  r.reconstructible = rec.reconstructible;
  r.cancellation = rec.reconstructible;
  r.route = rec.route;
  r.counterexample = rec.counterexample;

  const StrongResult strong = is_strongly_reconstructible(g, budget);
  r.strongly = strong.strongly;
  r.strong_counterexample = strong.witness;

  r.involution = find_involution(g, budget);
  r.has_involution = r.involution.has_value();
  r.bipartite = is_bipartite(g);
  if (r.bipartite) {
    const BipartiteDecision d = bipartite_cancellation_decider(g);
    if (d.cancellation != r.reconstructible) {
      throw InvariantViolation("bipartite decider disagrees with the general decider");
    }
    r.witness_involution = d.witness;
  }
  r.census = orbit_census(g, budget);

  if (r.strongly && !r.reconstructible) throw InvariantViolation("strongly reconstructible but not reconstructible");
  if (r.counterexample.has_value() == r.reconstructible) throw InvariantViolation("counterexample presence mismatch");
  if (r.strong_counterexample.has_value() == r.strongly) throw InvariantViolation("strong witness presence mismatch");
  if (r.reconstructible != (r.census.orbit_count == 1)) {
    throw InvariantViolation("reconstructibility disagrees with the orbit census");
  }
  return r;
}

}  // namespace nbrecon
