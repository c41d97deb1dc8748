#pragma once

// Brute-force ground truth. Nothing here consults anti-automorphisms when
// deciding; the oracles scan labeled graphs and compare neighborhoods or
// products directly, so agreement with the deciders is independent evidence.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbrecon/antiauto.hpp"
#include "nbrecon/detail/matcher.hpp"
#include "nbrecon/enumerate.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/iso.hpp"
#include "nbrecon/product.hpp"

namespace nbrecon {

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

inline Graph k2() { return complete_graph(2); }

/// Every labeled graph (loops allowed) on V(G) with the same neighborhood
/// multiset as G, in enumeration order. Default guard n <= 6.
inline std::vector<Graph> neighborhood_oracle(const Graph& g, Budget budget = {}) {
  budget.require(g.order() <= 6, "neighborhood oracle is limited to 6 vertices by default");
  const std::vector<VertexSet> target = sorted_rows(g);
  std::vector<Graph> out;
  for (const Graph& h : enumerate_labeled_graphs(g.order(), true, Budget{true})) {
    if (sorted_rows(h) == target) out.push_back(h);
  }
  return out;
}

inline constexpr const char* kCancellationBasis =
    "H ranges over all labeled graphs with loops on n vertices; only K = K2 is tested. "
    "Every bipartite K with an edge admits homomorphisms K2 -> K and K -> K2, so G x K2 = H x K2 "
    "decides cancellation for all bipartite K; K with an odd cycle cancels unconditionally.";

struct CancellationOracleResult {
  bool cancels = true;
  std::optional<Graph> counterexample;  // first H in enumeration order with G x K2 = H x K2, H not = G
  std::string basis = kCancellationBasis;
};

namespace detail {

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d.push_back(set_size(g.row(v)));
  std::sort(d.begin(), d.end());
  return d;
}

inline std::vector<int> component_sizes(const Graph& g) {
  std::vector<int> s;
  for (VertexSet c : components(g)) s.push_back(set_size(c));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Does G cancel against K2 among all labeled H on n(G) vertices? H is
/// filtered by degree multiset and product component sizes before any
/// certificate is computed. Default guard n <= 6.
inline CancellationOracleResult cancellation_oracle(const Graph& g, Budget budget = {}) {
  budget.require(g.order() <= 6, "cancellation oracle is limited to 6 vertices by default");
  CancellationOracleResult result;
  const Graph k = k2();
  const Graph gk = direct_product(g, k);
  const std::vector<int> degrees = detail::sorted_degrees(g);
  const std::vector<int> sizes = detail::component_sizes(gk);
  const Certificate product_cert = canonical_form(gk);
  const Certificate base = canonical_form(g);

  for (const Graph& h : enumerate_labeled_graphs(g.order(), true, Budget{true})) {
    if (detail::sorted_degrees(h) != degrees) continue;
    const Graph hk = direct_product(h, k);
    if (detail::component_sizes(hk) != sizes) continue;
    if (canonical_form(hk) != product_cert) continue;
    if (canonical_form(h) != base) {
      result.cancels = false;
      result.counterexample = h;
      break;
    }
  }
  return result;
}

/// Explicit isomorphism G x K -> G^a x K: the identity on layers k ∈ X and
/// (g, k) ↦ (a(g), k) on layers k ∈ Y, for a bipartition X ∪ Y of K.
struct ProductIsoWitness {
  Graph source;  // G x K
  Graph target;  // G^a x K
  Permutation theta;
};

inline ProductIsoWitness product_iso_witness(const Graph& g, const Permutation& a, const Graph& k) {
  if (a.size() != g.order() || !is_anti_automorphism(g, a)) {
    throw UsageError("product witness needs an anti-automorphism of G");
  }
  const Bipartition bip = bipartition(k);
  if (!bip.bipartite) throw UsageError("product witness needs a bipartite K");
  if (k.edge_count() == 0) throw UsageError("product witness needs K with at least one edge");

  const int nk = k.order();
  const VertexSet x_side = bip.x();
  std::vector<int> images(static_cast<std::size_t>(g.order() * nk));
  for (int v = 0; v < g.order(); ++v) {
    for (int w = 0; w < nk; ++w) {
      const int img = contains(x_side, w) ? v : a(v);
      images[static_cast<std::size_t>(product_vertex(v, w, nk))] = product_vertex(img, w, nk);
    }
  }
  ProductIsoWitness witness{direct_product(g, k), direct_product(apply_anti(g, a), k),
                            Permutation::from_images(images)};
  if (!is_isomorphism(witness.source, witness.target, witness.theta)) {
    throw InvariantViolation("layer map is not an isomorphism of the products");
  }
  return witness;
}

enum class ExtractStatus { extracted, not_isomorphic, only_non_layer_preserving };

inline const char* to_string(ExtractStatus s) {
  switch (s) {
    case ExtractStatus::extracted: return "extracted";
    case ExtractStatus::not_isomorphic: return "not_isomorphic";
    case ExtractStatus::only_non_layer_preserving: return "only_non_layer_preserving";
  }
  return "?";
}

struct ExtractResult {
  ExtractStatus status = ExtractStatus::not_isomorphic;
  std::optional<Permutation> alpha;        // mu^-1 lambda ∈ Ant(G)
  std::optional<Permutation> mu;           // isomorphism G^alpha -> H
  std::optional<Permutation> product_iso;  // the layer-preserving G x K2 -> H x K2
};

/// Looks for an isomorphism G x K2 -> H x K2 of the form (g, k) ↦ (b(g, k), k)
/// and reads off mu = b(., 0), lambda = b(., 1), alpha = mu^-1 lambda.
/// Default guard n <= 6.
inline ExtractResult extract_anti_from_product_iso(const Graph& g, const Graph& h, Budget budget = {}) {
  if (g.order() != h.order()) throw UsageError("graphs have different orders");
  budget.require(g.order() <= 6, "product iso extraction is limited to 6 vertices by default");
  const int n = g.order();
  const Graph k = k2();
  const Graph gk = direct_product(g, k);
  const Graph hk = direct_product(h, k);

  std::vector<VertexSet> allowed(static_cast<std::size_t>(2 * n));
  VertexSet layer[2] = {0, 0};
  for (int v = 0; v < n; ++v) {
    layer[0] |= singleton(product_vertex(v, 0, 2));
    layer[1] |= singleton(product_vertex(v, 1, 2));
  }
  for (int v = 0; v < 2 * n; ++v) allowed[static_cast<std::size_t>(v)] = layer[v % 2];

  ExtractResult result;
  detail::for_each_isomorphism(gk, hk, allowed, [&](const Permutation& phi) {
    result.product_iso = phi;
    return false;
  });
  if (!result.product_iso) {
    result.status = is_isomorphic(gk, hk) ? ExtractStatus::only_non_layer_preserving : ExtractStatus::not_isomorphic;
    return result;
  }

  std::vector<int> mu(static_cast<std::size_t>(n));
  std::vector<int> lambda(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    mu[static_cast<std::size_t>(v)] = (*result.product_iso)(product_vertex(v, 0, 2)) / 2;
    lambda[static_cast<std::size_t>(v)] = (*result.product_iso)(product_vertex(v, 1, 2)) / 2;
  }
  const Permutation m = Permutation::from_images(mu);
  const Permutation l = Permutation::from_images(lambda);
  const Permutation a = compose(m.inverse(), l);
  if (!is_anti_automorphism(g, a)) throw InvariantViolation("mu^-1 lambda is not an anti-automorphism");
  if (!is_isomorphism(apply_anti(g, a), h, m)) throw InvariantViolation("mu is not an isomorphism G^alpha -> H");
  result.status = ExtractStatus::extracted;
  result.alpha = a;
  result.mu = m;
  return result;
}

}  // namespace nbrecon
