#pragma once

#include <array>
#include <span>
#include <vector>

#include "nbrecon/bits.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/permutation.hpp"

namespace nbrecon::detail {

/// Backtracking search for bijections phi: V(g) -> V(h) that carry edges and
/// loops both ways, with phi(v) restricted to allowed[v]. Vertices of g are
/// assigned in index order and candidates tried lowest first, so results come
/// out in lexicographic order. `visit(phi)` returns false to stop; the function
/// returns true iff it was stopped.
template <class Visitor>
bool for_each_isomorphism(const Graph& g, const Graph& h, std::span<const VertexSet> allowed,
                          Visitor&& visit) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(allowed.size()) != n) return false;

  std::array<VertexSet, kMaxVertices> candidates{};
  for (int v = 0; v < n; ++v) {
    VertexSet c = 0;
    const int dv = set_size(g.row(v));
    for_each_vertex(allowed[v] & h.vertices(), [&](int w) {
      if (h.has_loop(w) == g.has_loop(v) && set_size(h.row(w)) == dv) c |= singleton(w);
    });
    if (c == 0) return false;
    candidates[v] = c;
  }

  std::array<int, kMaxVertices> image{};
  std::array<VertexSet, kMaxVertices> pending{};
  VertexSet used = 0;
  int k = 0;
  bool stopped = false;
  if (n == 0) return !visit(Permutation::identity(0));
  pending[0] = candidates[0];

  while (k >= 0) {
    if (pending[k] == 0) {
      --k;
      if (k >= 0) used &= ~singleton(image[k]);
      continue;
    }
    const int w = lowest(pending[k]);
    pending[k] &= pending[k] - 1;

    VertexSet expected = 0;
    for_each_vertex(g.row(k) & first_n(k), [&](int j) { expected |= singleton(image[j]); });
    if ((h.row(w) & used) != expected) continue;

    image[k] = w;
    if (k + 1 == n) {
      std::vector<int> images(image.begin(), image.begin() + n);
      if (!visit(Permutation::from_images(images))) {
        stopped = true;
        break;
      }
      continue;
    }
    used |= singleton(w);
    ++k;
    pending[k] = candidates[k] & ~used;
  }
  return stopped;
}

}  // namespace nbrecon::detail
