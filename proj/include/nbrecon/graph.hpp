#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbrecon/bits.hpp"
#include "nbrecon/errors.hpp"
#include "nbrecon/permutation.hpp"

namespace nbrecon {

using Edge = std::pair<int, int>;

/// A finite graph on vertices 0..n-1 given as a symmetric relation.
/// Loops are ordinary edges xx; multi-edges do not exist.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw CapacityError("graph order " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxVertices));
    }
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Rows must describe a symmetric relation on 0..rows.size()-1.
  static Graph from_rows(std::span<const VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    const VertexSet domain = first_n(g.n_);
    for (int x = 0; x < g.n_; ++x) {
      if ((rows[x] & ~domain) != 0) throw UsageError("row " + std::to_string(x) + " leaves the vertex set");
      g.rows_[x] = rows[x];
    }
    for (int x = 0; x < g.n_; ++x) {
      for_each_vertex(g.rows_[x], [&](int y) {
        if (!contains(g.rows_[y], x)) {
          throw UsageError("asymmetric relation at " + std::to_string(x) + "," + std::to_string(y));
        }
      });
    }
    return g;
  }

  int order() const { return n_; }

  VertexSet vertices() const { return first_n(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] |= singleton(v);
    rows_[v] |= singleton(u);
  }

  bool adjacent(int u, int v) const { return contains(rows_[u], v); }

  bool has_loop(int v) const { return contains(rows_[v], v); }

  /// Open neighborhood of v as a bit set (contains v iff v carries a loop).
  VertexSet row(int v) const { return rows_[v]; }

  std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  VertexSet loops() const {
    VertexSet s = 0;
    for (int v = 0; v < n_; ++v) {
      if (has_loop(v)) s |= singleton(v);
    }
    return s;
  }

  /// Undirected edges, loops included, each once as (min, max), sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for_each_vertex(rows_[u] & ~first_n(u), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(set_size(rows_[v]));
    return (twice + static_cast<std::size_t>(set_size(loops()))) / 2;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw UsageError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

/// A relation on 0..n-1 with no symmetry requirement.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw CapacityError("digraph order exceeds 64");
  }

  int order() const { return n_; }
  void add_arc(int u, int v) { rows_[u] |= singleton(v); }
  bool has_arc(int u, int v) const { return contains(rows_[u], v); }
  VertexSet out_neighbors(int u) const { return rows_[u]; }
  std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  bool is_symmetric() const { return first_asymmetric_arc().first < 0; }

  /// Some arc u->v whose reverse is missing, or (-1,-1).
  Edge first_asymmetric_arc() const {
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (has_arc(u, v) && !has_arc(v, u)) return {u, v};
      }
    }
    return {-1, -1};
  }

  /// Throws UsageError when the arc set is not symmetric.
  Graph to_graph() const { return Graph::from_rows(rows()); }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

inline VertexSet neighborhood(const Graph& g, int x) {
  g.check_vertex(x);
  return g.row(x);
}

/// {N(x) | x in V(G)} with duplicates kept. Each set is sorted ascending and
/// the list of sets is sorted lexicographically, so equality is positional.
struct NeighborhoodMultiset {
  std::vector<std::vector<int>> entries;

  static NeighborhoodMultiset from_rows(std::span<const VertexSet> rows) {
    NeighborhoodMultiset m;
    m.entries.reserve(rows.size());
    for (VertexSet r : rows) m.entries.push_back(to_list(r));
    std::sort(m.entries.begin(), m.entries.end());
    return m;
  }

  friend bool operator==(const NeighborhoodMultiset&, const NeighborhoodMultiset&) = default;
};

inline NeighborhoodMultiset neighborhood_multiset(const Graph& g) {
  return NeighborhoodMultiset::from_rows(g.rows());
}

/// Rows sorted numerically. Equal for two graphs on the same vertex set
/// exactly when their neighborhood multisets are equal; cheaper to build.
inline std::vector<VertexSet> sorted_rows(const Graph& g) {
  std::vector<VertexSet> r(g.rows().begin(), g.rows().end());
  std::sort(r.begin(), r.end());
  return r;
}

/// Vertices grouped by equal neighborhoods. Blocks are ordered by their
/// smallest vertex.
struct RPartition {
  std::vector<VertexSet> classes;

  int class_of(int v) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (contains(classes[i], v)) return static_cast<int>(i);
    }
    return -1;
  }
};

inline RPartition r_partition(const Graph& g) {
  RPartition p;
  VertexSet assigned = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (contains(assigned, x)) continue;
    VertexSet block = 0;
    for (int y = x; y < g.order(); ++y) {
      if (g.row(y) == g.row(x)) block |= singleton(y);
    }
    assigned |= block;
    p.classes.push_back(block);
  }
  return p;
}

/// H's vertices are shifted by order(G).
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) {
    throw CapacityError("disjoint union has " + std::to_string(n) + " vertices, cap is 64");
  }
  Graph u(n);
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(a + g.order(), b + g.order());
  return u;
}

/// The graph with edges p(x)p(y) for xy in E(G).
inline Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw UsageError("relabeling permutation has the wrong length");
  std::array<VertexSet, kMaxVertices> rows{};
  for (int x = 0; x < g.order(); ++x) rows[p(x)] = p.apply(g.row(x));
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(g.order())});
}

}  // namespace nbrecon
