#pragma once

#include <string>
#include <vector>

#include "nbrecon/graph.hpp"

namespace nbrecon {

/// G × H on vertices (x, x') ↦ x·n(H) + x'. (x,x')(y,y') is an edge iff
/// xy ∈ E(G) and x'y' ∈ E(H); in particular (x,x') has a loop iff both x and
/// x' do.
inline Graph direct_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng * nh > kMaxVertices) {
    throw CapacityError("direct product has " + std::to_string(ng * nh) + " vertices, cap is 64");
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(ng * nh), 0);
  for (int x = 0; x < ng; ++x) {
    for (int xp = 0; xp < nh; ++xp) {
      VertexSet r = 0;
      for_each_vertex(g.row(x), [&](int y) { r |= h.row(xp) << (y * nh); });
      rows[static_cast<std::size_t>(x * nh + xp)] = r;
    }
  }
  return Graph::from_rows(rows);
}

inline int product_vertex(int x, int xp, int factor_order) { return x * factor_order + xp; }

/// Connected components ordered by smallest vertex. Loops connect nothing.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    VertexSet comp = singleton(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.row(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Two-coloring per component, or an odd closed walk when none exists.
struct Bipartition {
  struct Part {
    VertexSet vertices = 0;
    VertexSet x = 0;  // side holding the component's smallest vertex
    VertexSet y = 0;
  };

  bool bipartite = true;
  std::vector<Part> parts;  // filled only when bipartite
  /// Closed walk v0 v1 ... v_{k-1} (back to v0) of odd length k; a loop at v
  /// is the walk [v].
  std::vector<int> odd_cycle;

  VertexSet x() const {
    VertexSet s = 0;
    for (const auto& p : parts) s |= p.x;
    return s;
  }
  VertexSet y() const {
    VertexSet s = 0;
    for (const auto& p : parts) s |= p.y;
    return s;
  }
  /// Index of the part containing v, or -1.
  int part_of(int v) const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (contains(parts[i].vertices, v)) return static_cast<int>(i);
    }
    return -1;
  }
};

inline Bipartition bipartition(const Graph& g) {
  Bipartition result;
  const int n = g.order();
  if (g.loops() != 0) {
    result.bipartite = false;
    result.odd_cycle = {lowest(g.loops())};
    return result;
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (VertexSet comp : components(g)) {
    const int root = lowest(comp);
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      bool conflict = false;
      int cu = -1;
      int cw = -1;
      for_each_vertex(g.row(u), [&](int w) {
        if (conflict) return;
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          conflict = true;
          cu = u;
          cw = w;
        }
      });
      if (conflict) {
        // tree paths from u and w up to their common ancestor plus the edge uw
        std::vector<int> up;
        std::vector<int> down;
        int a = cu;
        int b = cw;
        while (depth[a] > depth[b]) {
          up.push_back(a);
          a = parent[a];
        }
        while (depth[b] > depth[a]) {
          down.push_back(b);
          b = parent[b];
        }
        while (a != b) {
          up.push_back(a);
          down.push_back(b);
          a = parent[a];
          b = parent[b];
        }
        up.push_back(a);
        up.insert(up.end(), down.rbegin(), down.rend());
        result.bipartite = false;
        result.parts.clear();
        result.odd_cycle = std::move(up);
        return result;
      }
    }
    Bipartition::Part part;
    part.vertices = comp;
    for_each_vertex(comp, [&](int v) { (color[v] == 0 ? part.x : part.y) |= singleton(v); });
    result.parts.push_back(part);
  }
  return result;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

}  // namespace nbrecon
