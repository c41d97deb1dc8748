#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbrecon/detail/canonical_search.hpp"
#include "nbrecon/detail/matcher.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/permutation.hpp"

namespace nbrecon {

/// Opaque isomorphism-class identifier plus the relabeling that produced it.
/// Only `bytes` takes part in comparisons.
struct Certificate {
  std::vector<std::uint8_t> bytes;
  Permutation labeling;  // v ↦ canonical position

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      out += kDigits[b >> 4U];
      out += kDigits[b & 0xFU];
    }
    return out;
  }

  /// `bytes` as a string, for use as a hash key.
  std::string key() const { return {bytes.begin(), bytes.end()}; }

  friend bool operator==(const Certificate& a, const Certificate& b) { return a.bytes == b.bytes; }
};

/// Byte layout: n, then each canonical row as ceil(n/8) little-endian bytes.
inline Certificate canonical_form(const Graph& g) {
  detail::CanonicalSearch search(g);
  search.run();
  const int n = g.order();
  const int row_bytes = (n + 7) / 8;
  Certificate c;
  c.bytes.reserve(1 + static_cast<std::size_t>(n * row_bytes));
  c.bytes.push_back(static_cast<std::uint8_t>(n));
  for (int i = 0; i < n; ++i) {
    const VertexSet r = search.canonical_rows()[i];
    for (int b = 0; b < row_bytes; ++b) c.bytes.push_back(static_cast<std::uint8_t>(r >> (8 * b)));
  }
  c.labeling = search.labeling();
  return c;
}

/// Canonical adjacency matrix packed into one word; exact for n <= 8.
inline std::uint64_t packed_canonical_form(const Graph& g) {
  if (g.order() > 8) throw CapacityError("packed canonical form needs n <= 8");
  detail::CanonicalSearch search(g);
  search.run();
  std::uint64_t key = 0;
  for (int i = 0; i < g.order(); ++i) key |= search.canonical_rows()[i] << (8 * i);
  return key;
}

/// Checks the definition directly: xy ∈ E(G) ⟺ φ(x)φ(y) ∈ E(H) for all pairs.
inline bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& phi) {
  if (g.order() != h.order() || phi.size() != g.order()) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (phi.apply(g.row(x)) != h.row(phi(x))) return false;
  }
  return true;
}

namespace detail {

inline bool same_cheap_invariants(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (set_size(g.loops()) != set_size(h.loops())) return false;
  std::vector<int> dg;
  std::vector<int> dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(set_size(g.row(v)) * 2 + (g.has_loop(v) ? 1 : 0));
    dh.push_back(set_size(h.row(v)) * 2 + (h.has_loop(v) ? 1 : 0));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  return dg == dh;
}

}  // namespace detail

inline std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  if (!detail::same_cheap_invariants(g, h)) return std::nullopt;
  const Certificate cg = canonical_form(g);
  const Certificate ch = canonical_form(h);
  if (cg != ch) return std::nullopt;
  Permutation phi = compose(ch.labeling.inverse(), cg.labeling);
  if (!is_isomorphism(g, h, phi)) {
    throw InvariantViolation("canonical labelings agree but do not compose to an isomorphism");
  }
  return phi;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (!detail::same_cheap_invariants(g, h)) return false;
  return canonical_form(g) == canonical_form(h);
}

/// Every automorphism, in lexicographic order. Default guard n <= 8.
inline std::vector<Permutation> automorphisms(const Graph& g, Budget budget = {}) {
  budget.require(g.order() <= 8, "automorphism listing is limited to 8 vertices by default");
  std::vector<Permutation> out;
  std::vector<VertexSet> allowed(static_cast<std::size_t>(g.order()), g.vertices());
  detail::for_each_isomorphism(g, g, allowed, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

inline bool is_involution(const Permutation& p) {
  return !p.is_identity() && compose(p, p).is_identity();
}

/// Lexicographically first automorphism of order exactly 2, if any.
inline std::optional<Permutation> find_involution(const Graph& g, Budget budget = {}) {
  budget.require(g.order() <= 8, "involution search is limited to 8 vertices by default");
  std::optional<Permutation> found;
  std::vector<VertexSet> allowed(static_cast<std::size_t>(g.order()), g.vertices());
  detail::for_each_isomorphism(g, g, allowed, [&](const Permutation& p) {
    if (is_involution(p)) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

inline bool has_involution(const Graph& g, Budget budget = {}) {
  return find_involution(g, budget).has_value();
}

}  // namespace nbrecon
