#pragma once

// Exhaustive cross-checks over every labeled graph up to a given order.
//
// For each n the suite first tabulates, over all labeled graphs with loops,
// the isomorphism class, the neighborhood multiset and the isomorphism class
// of H x K2. Reconstructibility and cancellation then have direct answers
// (does every H sharing G's multiset / G's K2-product lie in G's class?)
// that never look at anti-automorphisms, and every decider is compared
// against them. Smaller orders add checks whose cost grows with n!.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nbrecon/antiauto.hpp"
#include "nbrecon/decide.hpp"
#include "nbrecon/enumerate.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/iso.hpp"
#include "nbrecon/oracle.hpp"
#include "nbrecon/product.hpp"

namespace nbrecon {

struct VerifyOptions {
  int max_n = 5;
  bool loops = false;
  unsigned jobs = 0;  // 0: hardware concurrency
  int bipartite_max_n = 7;
  bool product_suites = true;
  Budget budget{};
};

struct CensusRow {
  std::string suite;  // "graphs" or "bipartite_sweep"
  int n = 0;
  bool loops = false;
  std::uint64_t graphs = 0;
  std::uint64_t non_reconstructible = 0;
  std::uint64_t non_strongly = 0;
  std::uint64_t bipartite = 0;
  std::uint64_t bipartite_failures = 0;  // bipartite and not a cancellation graph
};

struct Violation {
  std::string check;
  int n = 0;
  std::uint64_t index = 0;  // labeled-graph index in the suite's enumeration
  std::string graph;        // edge list "u-v ..."
  std::string detail;
};

struct SuiteTiming {
  std::string suite;
  double seconds = 0.0;
};

struct VerificationReport {
  int max_n = 0;
  bool loops = false;
  unsigned jobs = 1;
  int bipartite_max_n = 0;
  std::vector<CensusRow> census;
  std::map<std::string, std::uint64_t> checks;  // check name -> times evaluated
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxRecorded, sorted
  std::vector<SuiteTiming> timings;
  std::string oracle_basis = kCancellationBasis;

  static constexpr std::size_t kMaxRecorded = 200;

  bool ok() const { return violation_count == 0; }
};

inline std::string edge_list(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

namespace detail {

struct Tally {
  std::map<std::string, std::uint64_t> checks;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  CensusRow row;

  void record(const std::string& check, int n, std::uint64_t index, const Graph& g, std::string detail) {
    ++violation_count;
    if (violations.size() < VerificationReport::kMaxRecorded) {
      violations.push_back({check, n, index, edge_list(g), std::move(detail)});
    }
  }

  void merge(Tally&& other) {
    for (auto& [k, v] : other.checks) checks[k] += v;
    violation_count += other.violation_count;
    for (auto& v : other.violations) violations.push_back(std::move(v));
    row.graphs += other.row.graphs;
    row.non_reconstructible += other.row.non_reconstructible;
    row.non_strongly += other.row.non_strongly;
    row.bipartite += other.row.bipartite;
    row.bipartite_failures += other.row.bipartite_failures;
  }
};

/// Calls body(i, partial[w]) for i in [0, total), handing out chunks of
/// indices to `jobs` threads. Exceptions are rethrown after all threads stop.
template <class Partial, class Body>
std::vector<Partial> run_sharded(std::uint64_t total, unsigned jobs, Body&& body) {
  jobs = std::max(1U, jobs);
  const std::uint64_t chunk = std::clamp<std::uint64_t>(total / (jobs * 32ULL), 1, 4096);
  std::atomic<std::uint64_t> next{0};
  std::vector<Partial> partials(jobs);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned w) {
    try {
      for (;;) {
        const std::uint64_t first = next.fetch_add(chunk);
        if (first >= total) break;
        const std::uint64_t last = std::min(total, first + chunk);
        for (std::uint64_t i = first; i < last; ++i) body(i, partials[w]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(total);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return partials;
}

struct Unit {};

inline std::uint64_t packed_sorted_rows(const Graph& g) {
  std::uint64_t key = 0;
  const std::vector<VertexSet> rows = sorted_rows(g);
  for (std::size_t i = 0; i < rows.size(); ++i) key |= rows[i] << (8 * i);
  return key;
}

inline std::string product_key(const Graph& g) { return canonical_form(direct_product(g, k2())).key(); }

struct ClassGroup {
  std::uint64_t members = 0;
  std::uint64_t first_class = 0;
  bool mixed = false;

  void add(std::uint64_t cls) {
    if (members++ == 0) {
      first_class = cls;
    } else if (cls != first_class) {
      mixed = true;
    }
  }
};

/// Lookup tables over every labeled graph with loops on n vertices.
struct OrderTables {
  int n = 0;
  std::vector<std::uint64_t> canon;
  std::unordered_map<std::uint64_t, ClassGroup> by_multiset;
  std::unordered_map<std::uint64_t, std::string> product_of_class;
  std::unordered_map<std::string, ClassGroup> by_product;

  const ClassGroup& multiset_group(const Graph& g) const { return by_multiset.at(packed_sorted_rows(g)); }
  const ClassGroup& product_group(const Graph& g) const {
    return by_product.at(product_of_class.at(canon[labeled_graph_index(g, true)]));
  }
};

inline OrderTables build_tables(int n, unsigned jobs) {
  OrderTables t;
  t.n = n;
  const std::uint64_t total = labeled_graph_count(n, true);
  t.canon.assign(total, 0);
  std::vector<std::uint64_t> multiset(total, 0);
  run_sharded<Unit>(total, jobs, [&](std::uint64_t i, Unit&) {
    const Graph g = labeled_graph_at(n, true, i);
    t.canon[i] = packed_canonical_form(g);
    multiset[i] = packed_sorted_rows(g);
  });

  std::vector<std::uint64_t> representatives;
  for (std::uint64_t i = 0; i < total; ++i) {
    t.by_multiset[multiset[i]].add(t.canon[i]);
    if (t.product_of_class.emplace(t.canon[i], std::string{}).second) representatives.push_back(i);
  }
  std::vector<std::string> keys(representatives.size());
  run_sharded<Unit>(representatives.size(), jobs, [&](std::uint64_t r, Unit&) {
    keys[r] = product_key(labeled_graph_at(n, true, representatives[r]));
  });
  for (std::size_t r = 0; r < representatives.size(); ++r) {
    t.product_of_class[t.canon[representatives[r]]] = keys[r];
  }
  // every labeled H counts, so the group sees all of G's class mates too
  for (std::uint64_t i = 0; i < total; ++i) t.by_product[t.product_of_class[t.canon[i]]].add(t.canon[i]);
  return t;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

struct GraphContext {
  const Graph& g;
  int n;
  std::uint64_t index;
  Tally& tally;

  void check(const char* name, bool ok, const std::string& detail = {}) {
    ++tally.checks[name];
    if (!ok) tally.record(name, n, index, g, detail);
  }
};

inline std::string perm_text(const Permutation& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p(i));
  return s + "]";
}

inline void check_small_order(GraphContext& c, const std::vector<Permutation>& ant,
                              const std::vector<Permutation>& perms) {
  const Graph& g = c.g;
  // the oracle's multiset class is exactly the set of twists
  {
    std::set<std::vector<VertexSet>> oracle;
    for (const Graph& h : neighborhood_oracle(g)) oracle.insert({h.rows().begin(), h.rows().end()});
    std::set<std::vector<VertexSet>> twists;
    for (const Permutation& a : ant) {
      const Graph h = apply_anti(g, a);
      twists.insert({h.rows().begin(), h.rows().end()});
    }
    c.check("neighborhood_oracle_equals_twists", oracle == twists,
            std::to_string(oracle.size()) + " oracle graphs vs " + std::to_string(twists.size()) + " twists");
  }

  std::unordered_set<Permutation> ant_set(ant.begin(), ant.end());
  std::vector<Permutation> auts;
  bool symmetric_ok = true;
  for (const Permutation& p : perms) {
    const bool anti = is_anti_automorphism(g, p);
    symmetric_ok = symmetric_ok && permuted_digraph(g, p).is_symmetric() == anti && anti == ant_set.contains(p);
    if (is_isomorphism(g, g, p)) auts.push_back(p);
  }
  c.check("permuted_digraph_symmetric_iff_anti", symmetric_ok);

  const std::vector<TwoFoldPair> tf = enumerate_aut_tf(g);
  std::vector<TwoFoldPair> brute;
  for (const Permutation& l : perms) {
    for (const Permutation& m : perms) {
      if (is_two_fold(g, {l, m})) brute.push_back({l, m});
    }
  }
  c.check("two_fold_enumeration_matches_brute_force", tf == brute,
          std::to_string(tf.size()) + " listed vs " + std::to_string(brute.size()) + " by brute force");
  const std::set<TwoFoldPair> tf_set(tf.begin(), tf.end());
  bool anti_pairs = true;
  bool aut_pairs = true;
  for (const Permutation& p : perms) {
    anti_pairs = anti_pairs && ant_set.contains(p) == tf_set.contains({p, p.inverse()});
    aut_pairs = aut_pairs && is_isomorphism(g, g, p) == tf_set.contains({p, p});
  }
  c.check("anti_iff_inverse_pair_is_two_fold", anti_pairs);
  c.check("automorphism_iff_diagonal_pair_is_two_fold", aut_pairs);
  c.check("automorphism_listing_matches_brute_force", automorphisms(g) == auts);

  bool closed = true;
  for (const TwoFoldPair& pair : tf) {
    for (const Permutation& a : ant) closed = closed && ant_set.contains(act(pair, a));
  }
  c.check("two_fold_action_stays_in_ant", closed);

  const Graph k = k2();
  for (const Permutation& a : ant) {
    const Graph ga = apply_anti(g, a);
    bool witness_ok = true;
    try {
      product_iso_witness(g, a, k);
    } catch (const Error& e) {
      witness_ok = false;
    }
    c.check("product_witness_is_isomorphism", witness_ok, perm_text(a));
    const ExtractResult r = extract_anti_from_product_iso(g, ga);
    const bool round_trip = r.status == ExtractStatus::extracted && is_isomorphic(apply_anti(g, *r.alpha), ga);
    c.check("product_iso_round_trip", round_trip, perm_text(a) + " " + to_string(r.status));
  }
}

inline void check_orbits(GraphContext& c, const std::vector<Permutation>& ant) {
  const Graph& g = c.g;
  const AntOrbitPartition orbits = ant_orbits(g);
  c.check("orbit_partition_covers_ant", orbits.ant == ant);
  std::vector<std::uint64_t> cls(ant.size());
  for (std::size_t i = 0; i < ant.size(); ++i) cls[i] = packed_canonical_form(apply_anti(g, ant[i]));
  std::unordered_map<std::uint64_t, std::size_t> orbit_of_class;
  bool agree = true;
  for (std::size_t i = 0; i < ant.size(); ++i) {
    auto [it, fresh] = orbit_of_class.emplace(cls[i], orbits.orbit_of[i]);
    if (!fresh && it->second != orbits.orbit_of[i]) agree = false;  // one class, two orbits
    if (cls[i] != cls[orbits.representatives[orbits.orbit_of[i]]]) agree = false;  // one orbit, two classes
  }
  c.check("orbits_match_twist_iso_classes", agree);

  bool odd_ok = true;
  std::string bad;
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const auto order = static_cast<long long>(ant[i].order());
    for (long long k = 1; k <= order; ++k) {
      if (packed_canonical_form(apply_anti(g, ant[i].pow(1 + 2 * k))) != cls[i]) {
        odd_ok = false;
        bad = perm_text(ant[i]) + " k=" + std::to_string(k);
      }
    }
  }
  c.check("odd_powers_give_isomorphic_twists", odd_ok, bad);
}

inline void check_graph(const Graph& g, std::uint64_t index, const OrderTables& tables,
                        const std::vector<Permutation>& perms, Tally& tally) {
  const int n = g.order();
  GraphContext c{g, n, index, tally};
  ++tally.row.graphs;
  try {
    const ReconstructionResult fast = is_neighborhood_reconstructible(g);
    const ReconstructionResult plain = is_neighborhood_reconstructible(g, DecideOptions::plain_scan());
    const bool rec = fast.reconstructible;
    c.check("fast_paths_match_plain_scan", rec == plain.reconstructible,
            std::string("route ") + to_string(fast.route));
    if (!rec) ++tally.row.non_reconstructible;

    const ClassGroup& mgroup = tables.multiset_group(g);
    const ClassGroup& pgroup = tables.product_group(g);
    c.check("decider_matches_neighborhood_oracle", rec == !mgroup.mixed);
    c.check("decider_matches_cancellation_oracle", rec == !pgroup.mixed);
    if (n <= 4) c.check("cancellation_oracle_matches_table", cancellation_oracle(g).cancels == !pgroup.mixed);

    if (fast.counterexample) {
      const AntiWitness& w = *fast.counterexample;
      c.check("counterexample_is_valid",
              is_anti_automorphism(g, w.alpha) && w.g_alpha == apply_anti(g, w.alpha) && !is_isomorphic(g, w.g_alpha),
              perm_text(w.alpha));
    }

    bool strongly = false;
    try {
      strongly = is_strongly_reconstructible(g).strongly;
      c.check("strong_routes_agree", true);
    } catch (const InvariantViolation& e) {
      c.check("strong_routes_agree", false, e.what());
    }
    if (!strongly) ++tally.row.non_strongly;
    c.check("strongly_matches_unique_multiset", strongly == (mgroup.members == 1));
    c.check("strongly_implies_reconstructible", !strongly || rec);
    c.check("no_involution_implies_reconstructible", has_involution(g) || rec);

    if (is_bipartite(g)) {
      ++tally.row.bipartite;
      if (!rec) ++tally.row.bipartite_failures;
      c.check("bipartite_decider_matches_general_decider", bipartite_cancellation_decider(g).cancellation == rec);
    }

    const std::vector<Permutation> ant = enumerate_ant(g);
    const std::vector<VertexSet> rows = sorted_rows(g);
    bool multiset_ok = true;
    for (const Permutation& a : ant) multiset_ok = multiset_ok && sorted_rows(apply_anti(g, a)) == rows;
    c.check("twist_preserves_neighborhood_multiset", multiset_ok);

    if (n <= 5) check_orbits(c, ant);
    if (n <= 4) check_small_order(c, ant, perms);
  } catch (const Error& e) {
    c.check("no_unexpected_error", false, e.what());
  }
}

inline std::vector<Graph> loopless_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, false)) out.push_back(g);
  }
  return out;
}

inline bool component_is_bipartite(const Graph& g, VertexSet comp) {
  if ((g.loops() & comp) != 0) return false;
  VertexSet side[2] = {singleton(lowest(comp)), 0};
  VertexSet frontier = side[0];
  int parity = 0;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.row(v); });
    if ((next & side[parity]) != 0) return false;
    frontier = next & ~side[1 - parity];
    side[1 - parity] |= next;
    parity = 1 - parity;
  }
  return true;
}

/// Cancellation against K3 and component counts of products, over loopless
/// graphs with at most `max_n` vertices.
inline Tally product_suites(int max_n, unsigned jobs) {
  Tally tally;
  const Graph k3 = complete_graph(3);
  for (int n = 0; n <= max_n; ++n) {
    std::unordered_map<std::string, ClassGroup> by_product;
    for (const Graph& g : enumerate_labeled_graphs(n, false)) {
      by_product[canonical_form(direct_product(g, k3)).key()].add(packed_canonical_form(g));
    }
    std::uint64_t index = 0;
    for (const Graph& g : enumerate_labeled_graphs(n, false)) {
      GraphContext c{g, n, index++, tally};
      c.check("odd_cycle_factor_cancels", !by_product[canonical_form(direct_product(g, k3)).key()].mixed);
    }
  }

  struct Component {
    int size;
    bool bipartite;
  };
  const std::vector<Graph> graphs = loopless_graphs_up_to(max_n);
  std::vector<std::vector<Component>> comps;
  for (const Graph& g : graphs) {
    std::vector<Component> cs;
    for (VertexSet c : components(g)) cs.push_back({set_size(c), component_is_bipartite(g, c)});
    comps.push_back(std::move(cs));
  }
  const std::uint64_t pairs = graphs.size() * graphs.size();
  auto partials = run_sharded<Tally>(pairs, jobs, [&](std::uint64_t p, Tally& t) {
    const std::size_t i = p / graphs.size();
    const std::size_t j = p % graphs.size();
    const Graph& g = graphs[i];
    const Graph& h = graphs[j];
    const Graph gh = direct_product(g, h);
    // per pair of components: a single (loopless) vertex leaves isolated
    // vertices, two bipartite factors split in two, otherwise connected
    std::size_t expected = 0;
    for (const Component& a : comps[i]) {
      for (const Component& b : comps[j]) {
        if (a.size == 1 || b.size == 1) {
          expected += static_cast<std::size_t>(a.size * b.size);
        } else {
          expected += a.bipartite && b.bipartite ? 2 : 1;
        }
      }
    }
    GraphContext c{g, g.order(), p, t};
    const std::size_t found = components(gh).size();
    c.check("product_component_count", found == expected,
            "with " + edge_list(h) + ": " + std::to_string(found) + " vs " + std::to_string(expected));
    c.check("product_commutes", canonical_form(gh) == canonical_form(direct_product(h, g)), "with " + edge_list(h));
  });
  for (auto& part : partials) tally.merge(std::move(part));
  return tally;
}

/// Bipartite loopless graphs: the bipartite decider against the general one
/// (bipartite shortcut off), and G x K2 = G + G.
inline Tally bipartite_sweep(int n, unsigned jobs, Budget budget) {
  DecideOptions general;
  general.bipartite_shortcut = false;
  general.budget = budget;
  const Graph k = k2();
  auto partials = run_sharded<Tally>(labeled_graph_count(n, false), jobs, [&](std::uint64_t i, Tally& t) {
    const Graph g = labeled_graph_at(n, false, i);
    if (!is_bipartite(g)) return;
    GraphContext c{g, n, i, t};
    ++t.row.graphs;
    ++t.row.bipartite;
    try {
      const BipartiteDecision d = bipartite_cancellation_decider(g);
      if (!d.cancellation) {
        ++t.row.non_reconstructible;
        ++t.row.bipartite_failures;
      }
      c.check("bipartite_sweep_decider_agreement", d.cancellation == is_neighborhood_reconstructible(g, general).reconstructible);
      c.check("bipartite_double_cover_is_two_copies", is_isomorphic(direct_product(g, k), disjoint_union(g, g)));
    } catch (const Error& e) {
      c.check("no_unexpected_error", false, e.what());
    }
  });
  Tally tally;
  for (auto& part : partials) tally.merge(std::move(part));
  return tally;
}

}  // namespace detail

inline VerificationReport verify_theorems(const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  const int default_cap = options.loops ? 5 : 6;
  if (options.max_n < 0 || options.bipartite_max_n < 0) throw UsageError("orders must be non-negative");
  options.budget.require(options.max_n <= default_cap,
                         "verification beyond n = " + std::to_string(default_cap) +
                             (options.loops ? " with loops" : " without loops") + " exceeds the default budget");
  options.budget.require(options.bipartite_max_n <= 7, "bipartite sweep beyond n = 7 exceeds the default budget");

  VerificationReport report;
  report.max_n = options.max_n;
  report.loops = options.loops;
  report.bipartite_max_n = options.bipartite_max_n;
  report.jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  std::vector<Violation> violations;
  auto absorb = [&](detail::Tally&& t, const std::string& suite, int n, bool loops) {
    for (auto& [k, v] : t.checks) report.checks[k] += v;
    report.violation_count += t.violation_count;
    for (auto& v : t.violations) violations.push_back(std::move(v));
    if (!suite.empty()) {
      CensusRow row = t.row;
      row.suite = suite;
      row.n = n;
      row.loops = loops;
      report.census.push_back(row);
    }
  };
  auto seconds_since = [](Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  for (int n = 0; n <= options.max_n; ++n) {
    const auto start = Clock::now();
    const detail::OrderTables tables = detail::build_tables(n, report.jobs);
    const std::vector<Permutation> perms = n <= 4 ? detail::all_permutations(n) : std::vector<Permutation>{};
    auto partials = detail::run_sharded<detail::Tally>(
        labeled_graph_count(n, options.loops), report.jobs, [&](std::uint64_t i, detail::Tally& t) {
          detail::check_graph(labeled_graph_at(n, options.loops, i), i, tables, perms, t);
        });
    detail::Tally total;
    for (auto& p : partials) total.merge(std::move(p));
    absorb(std::move(total), "graphs", n, options.loops);
    report.timings.push_back({"graphs n=" + std::to_string(n), seconds_since(start)});
  }

  if (options.product_suites) {
    const auto start = Clock::now();
    absorb(detail::product_suites(std::min(options.max_n, 4), report.jobs), {}, 0, false);
    report.timings.push_back({"products", seconds_since(start)});
  }

  for (int n = 0; n <= options.bipartite_max_n; ++n) {
    const auto start = Clock::now();
    absorb(detail::bipartite_sweep(n, report.jobs, options.budget), "bipartite_sweep", n, false);
    report.timings.push_back({"bipartite_sweep n=" + std::to_string(n), seconds_since(start)});
  }

  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.check, a.n, a.index) < std::tie(b.check, b.n, b.index);
  });
  if (violations.size() > VerificationReport::kMaxRecorded) violations.resize(VerificationReport::kMaxRecorded);
  report.violations = std::move(violations);
  return report;
}

}  // namespace nbrecon
