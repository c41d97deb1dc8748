#pragma once

// Anti-automorphisms and two-fold automorphisms.
//
// A permutation a of V(G) is an anti-automorphism when
//     xy ∈ E(G)  ⟺  a(x) a⁻¹(y) ∈ E(G)      for all x, y.
// Then G^a, the graph with edges x a(y) for xy ∈ E(G), is symmetric and has
// N_{G^a}(a(y)) = N_G(y), so it shares G's neighborhood multiset.
//
// A pair (λ, μ) is a two-fold automorphism when xy ∈ E(G) ⟺ λ(x)μ(y) ∈ E(G),
// equivalently λ(N(x)) = N(μ(x)) for every x. These pairs form a group acting
// on Ant(G) by (λ, μ)·a = λ a μ⁻¹.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "nbrecon/graph.hpp"
#include "nbrecon/permutation.hpp"

namespace nbrecon {

namespace detail {

inline void require_length(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw UsageError("permutation has length " + std::to_string(p.size()) + " but the graph has " +
                     std::to_string(g.order()) + " vertices");
  }
}

}  // namespace detail

inline bool is_anti_automorphism(const Graph& g, const Permutation& a) {
  detail::require_length(g, a);
  // {y : a(x) a⁻¹(y) ∈ E} = a(N(a(x))), so the biconditional is N(x) = a(N(a(x))).
  for (int x = 0; x < g.order(); ++x) {
    if (a.apply(g.row(a(x))) != g.row(x)) return false;
  }
  return true;
}

/// Arcs x → p(y) for every ordered pair with xy ∈ E(G).
inline Digraph permuted_digraph(const Graph& g, const Permutation& p) {
  detail::require_length(g, p);
  Digraph d(g.order());
  for (int x = 0; x < g.order(); ++x) {
    for_each_vertex(g.row(x), [&](int y) { d.add_arc(x, p(y)); });
  }
  return d;
}

/// G^a. Throws InvalidAntiError when a is not an anti-automorphism.
inline Graph apply_anti(const Graph& g, const Permutation& a) {
  if (!is_anti_automorphism(g, a)) throw InvalidAntiError("permutation is not an anti-automorphism of the graph");
  return permuted_digraph(g, a).to_graph();
}

/// Ant(G) in lexicographic order. Default guard n <= 8.
inline std::vector<Permutation> enumerate_ant(const Graph& g, Budget budget = {}) {
  const int n = g.order();
  budget.require(n <= 8, "anti-automorphism enumeration is limited to 8 vertices by default");
  std::vector<Permutation> out;
  if (n == 0) {
    out.push_back(Permutation::identity(0));
    return out;
  }

  // Back-tracking on a(0), a(1), ... in index order. With every image below k
  // fixed, the pairs involving k reduce to N(a(k)) ∩ [0,k) = {j < k : a(j) ∈ N(k)},
  // and |N(a(k))| = |N(k)| always holds.
  std::array<VertexSet, kMaxVertices> same_degree{};
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < n; ++v) {
      if (set_size(g.row(v)) == set_size(g.row(x))) same_degree[x] |= singleton(v);
    }
  }
  std::array<int, kMaxVertices> image{};
  std::array<VertexSet, kMaxVertices> pending{};
  VertexSet used = 0;
  int k = 0;
  pending[0] = same_degree[0];
  while (k >= 0) {
    if (pending[k] == 0) {
      --k;
      if (k >= 0) used &= ~singleton(image[k]);
      continue;
    }
    const int v = lowest(pending[k]);
    pending[k] &= pending[k] - 1;

    VertexSet pulled = 0;
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(k, image[j])) pulled |= singleton(j);
    }
    if ((g.row(v) & first_n(k)) != pulled) continue;

    image[k] = v;
    if (k + 1 == n) {
      std::vector<int> images(image.begin(), image.begin() + n);
      out.push_back(Permutation::from_images(images));
      continue;
    }
    used |= singleton(v);
    ++k;
    pending[k] = same_degree[k] & ~used;
  }
  return out;
}

struct TwoFoldPair {
  Permutation lambda;
  Permutation mu;

  TwoFoldPair inverse() const { return {lambda.inverse(), mu.inverse()}; }

  friend TwoFoldPair compose(const TwoFoldPair& outer, const TwoFoldPair& inner) {
    return {compose(outer.lambda, inner.lambda), compose(outer.mu, inner.mu)};
  }

  friend bool operator==(const TwoFoldPair&, const TwoFoldPair&) = default;
  friend auto operator<=>(const TwoFoldPair&, const TwoFoldPair&) = default;
};

inline bool is_two_fold(const Graph& g, const TwoFoldPair& pair) {
  detail::require_length(g, pair.lambda);
  detail::require_length(g, pair.mu);
  for (int x = 0; x < g.order(); ++x) {
    if (pair.lambda.apply(g.row(x)) != g.row(pair.mu(x))) return false;
  }
  return true;
}

/// Aut^TF(G), sorted by (λ, μ). Default guard n <= 6.
///
/// Each candidate λ must permute the neighborhood multiset; the compatible μ
/// are then exactly the bijections with N(μ(x)) = λ(N(x)), of which there are
/// several whenever neighborhoods repeat.
inline std::vector<TwoFoldPair> enumerate_aut_tf(const Graph& g, Budget budget = {}) {
  const int n = g.order();
  budget.require(n <= 6, "two-fold automorphism enumeration is limited to 6 vertices by default");
  std::vector<TwoFoldPair> out;
  if (n == 0) {
    out.push_back({Permutation::identity(0), Permutation::identity(0)});
    return out;
  }

  const std::vector<VertexSet> target = sorted_rows(g);
  std::vector<int> lambda_images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lambda_images[static_cast<std::size_t>(i)] = i;

  std::vector<VertexSet> mapped(static_cast<std::size_t>(n));
  std::vector<VertexSet> mu_candidates(static_cast<std::size_t>(n));
  do {
    const Permutation lambda = Permutation::from_images(lambda_images);
    for (int x = 0; x < n; ++x) mapped[static_cast<std::size_t>(x)] = lambda.apply(g.row(x));
    std::vector<VertexSet> sorted_mapped = mapped;
    std::sort(sorted_mapped.begin(), sorted_mapped.end());
    if (sorted_mapped != target) continue;

    for (int x = 0; x < n; ++x) {
      VertexSet c = 0;
      for (int y = 0; y < n; ++y) {
        if (g.row(y) == mapped[static_cast<std::size_t>(x)]) c |= singleton(y);
      }
      mu_candidates[static_cast<std::size_t>(x)] = c;
    }

    std::array<int, kMaxVertices> image{};
    std::array<VertexSet, kMaxVertices> pending{};
    VertexSet used = 0;
    int k = 0;
    pending[0] = mu_candidates[0];
    while (k >= 0) {
      if (pending[k] == 0) {
        --k;
        if (k >= 0) used &= ~singleton(image[k]);
        continue;
      }
      const int w = lowest(pending[k]);
      pending[k] &= pending[k] - 1;
      image[k] = w;
      if (k + 1 == n) {
        std::vector<int> mu_images(image.begin(), image.begin() + n);
        out.push_back({lambda, Permutation::from_images(mu_images)});
        continue;
      }
      used |= singleton(w);
      ++k;
      pending[k] = mu_candidates[static_cast<std::size_t>(k)] & ~used;
    }
  } while (std::next_permutation(lambda_images.begin(), lambda_images.end()));
  return out;
}

/// (λ, μ)·a = λ ∘ a ∘ μ⁻¹, without membership checks.
inline Permutation act(const TwoFoldPair& pair, const Permutation& a) {
  return compose(compose(pair.lambda, a), pair.mu.inverse());
}

/// The action with its preconditions enforced: throws InvalidActionError
/// unless a ∈ Ant(G) and pair ∈ Aut^TF(G).
inline Permutation act(const Graph& g, const TwoFoldPair& pair, const Permutation& a) {
  if (!is_anti_automorphism(g, a)) throw InvalidActionError("acted-on permutation is not an anti-automorphism");
  if (!is_two_fold(g, pair)) throw InvalidActionError("pair is not a two-fold automorphism");
  Permutation result = act(pair, a);
  if (!is_anti_automorphism(g, result)) throw InvariantViolation("group action left Ant(G)");
  return result;
}

/// Ant(G) split into Aut^TF(G)-orbits.
struct AntOrbitPartition {
  std::vector<Permutation> ant;                     // lexicographic order
  std::vector<std::vector<std::size_t>> orbits;     // indices into ant, ascending
  std::vector<std::size_t> representatives;         // lexicographically least member of each orbit
  std::vector<std::size_t> orbit_of;                // ant index ↦ orbit index

  std::size_t orbit_count() const { return orbits.size(); }

  std::size_t identity_orbit() const {
    for (std::size_t i = 0; i < ant.size(); ++i) {
      if (ant[i].is_identity()) return orbit_of[i];
    }
    throw InvariantViolation("identity missing from Ant(G)");
  }
};

/// Orbits are closed from the lexicographically least unvisited member by
/// applying every two-fold pair, so each orbit costs |Aut^TF(G)| actions.
inline AntOrbitPartition ant_orbits(const Graph& g, Budget budget = {}) {
  AntOrbitPartition result;
  result.ant = enumerate_ant(g, budget);
  const std::vector<TwoFoldPair> group = enumerate_aut_tf(g, budget);

  std::unordered_map<Permutation, std::size_t> index;
  index.reserve(result.ant.size() * 2);
  for (std::size_t i = 0; i < result.ant.size(); ++i) index.emplace(result.ant[i], i);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  result.orbit_of.assign(result.ant.size(), kUnset);
  std::vector<Permutation> mu_inverse;
  mu_inverse.reserve(group.size());
  for (const auto& pair : group) mu_inverse.push_back(pair.mu.inverse());

  for (std::size_t i = 0; i < result.ant.size(); ++i) {
    if (result.orbit_of[i] != kUnset) continue;
    const std::size_t orbit_id = result.orbits.size();
    std::vector<std::size_t> members;
    for (std::size_t p = 0; p < group.size(); ++p) {
      const Permutation image = compose(compose(group[p].lambda, result.ant[i]), mu_inverse[p]);
      auto it = index.find(image);
      if (it == index.end()) throw InvariantViolation("two-fold action produced a non-anti-automorphism");
      if (result.orbit_of[it->second] == kUnset) {
        result.orbit_of[it->second] = orbit_id;
        members.push_back(it->second);
      } else if (result.orbit_of[it->second] != orbit_id) {
        throw InvariantViolation("orbits of the two-fold action overlap");
      }
    }
    std::sort(members.begin(), members.end());
    result.orbits.push_back(std::move(members));
    result.representatives.push_back(i);
  }
  return result;
}

}  // namespace nbrecon
