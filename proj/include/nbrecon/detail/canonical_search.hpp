#pragma once

// Canonical labeling by individualization and refinement.
//
// Nodes of the search tree are ordered partitions of V(G). Every node is
// refined to an equitable partition; a non-discrete node branches on each
// vertex of its first smallest non-singleton cell. A discrete leaf fixes a
// relabeling and the canonical form is the lexicographically least relabeled
// adjacency matrix over all leaves. Two leaves with equal matrices yield an
// automorphism, which prunes siblings in the same orbit of the pointwise
// stabilizer of the current path and lets the search jump back to the level
// where the two paths diverged.

#include <array>
#include <cstdint>
#include <vector>

#include "nbrecon/bits.hpp"
#include "nbrecon/graph.hpp"
#include "nbrecon/permutation.hpp"

namespace nbrecon::detail {

struct OrderedPartition {
  std::array<VertexSet, kMaxVertices> cells{};
  int count = 0;
};

class SplitterQueue {
 public:
  void push(VertexSet s) { items_[size_++] = s; }
  bool empty() const { return head_ == size_; }
  VertexSet pop() { return items_[head_++]; }

  /// Swap a pending splitter for its fragments; true if it was pending.
  bool replace_pending(VertexSet old_cell, const VertexSet* fragments, int count) {
    for (int q = head_; q < size_; ++q) {
      if (items_[q] == old_cell) {
        items_[q] = fragments[0];
        for (int f = 1; f < count; ++f) push(fragments[f]);
        return true;
      }
    }
    return false;
  }

 private:
  // Each split of a cell into f fragments enqueues at most f entries and the
  // number of cells never exceeds 64, so 4 * 64 entries cannot overflow.
  std::array<VertexSet, 4 * kMaxVertices> items_{};
  int head_ = 0;
  int size_ = 0;
};

/// Splits cells by neighbor counts into each splitter until no splitter is left.
inline void refine(const Graph& g, OrderedPartition& p, SplitterQueue& queue) {
  std::array<int, kMaxVertices> verts{};
  std::array<int, kMaxVertices> counts{};
  std::array<VertexSet, kMaxVertices> fragments{};
  while (!queue.empty()) {
    const VertexSet splitter = queue.pop();
    for (int i = 0; i < p.count; ++i) {
      const VertexSet cell = p.cells[i];
      if (set_size(cell) == 1) continue;
      int k = 0;
      bool uniform = true;
      for_each_vertex(cell, [&](int v) {
        verts[k] = v;
        counts[k] = set_size(g.row(v) & splitter);
        if (counts[k] != counts[0]) uniform = false;
        ++k;
      });
      if (uniform) continue;

      // insertion sort by count; ties keep index order
      for (int a = 1; a < k; ++a) {
        const int cv = counts[a];
        const int vv = verts[a];
        int b = a - 1;
        while (b >= 0 && counts[b] > cv) {
          counts[b + 1] = counts[b];
          verts[b + 1] = verts[b];
          --b;
        }
        counts[b + 1] = cv;
        verts[b + 1] = vv;
      }
      int f = 0;
      for (int a = 0; a < k; ++a) {
        if (a == 0 || counts[a] != counts[a - 1]) fragments[f++] = 0;
        fragments[f - 1] |= singleton(verts[a]);
      }

      for (int j = p.count - 1; j > i; --j) p.cells[j + f - 1] = p.cells[j];
      for (int a = 0; a < f; ++a) p.cells[i + a] = fragments[a];
      p.count += f - 1;

      if (!queue.replace_pending(cell, fragments.data(), f)) {
        for (int a = 0; a < f; ++a) queue.push(fragments[a]);
      }
      i += f - 1;
    }
  }
}

/// Cells ordered by (loop flag, degree without the loop), refined to equitable.
inline OrderedPartition initial_partition(const Graph& g) {
  OrderedPartition p;
  const int n = g.order();
  if (n == 0) return p;
  std::array<int, kMaxVertices> key{};
  for (int v = 0; v < n; ++v) {
    const int degree = set_size(g.row(v) & ~singleton(v));
    key[v] = (g.has_loop(v) ? 1 : 0) * (kMaxVertices + 1) + degree;
  }
  std::array<int, kMaxVertices> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  for (int a = 1; a < n; ++a) {
    const int v = order[a];
    int b = a - 1;
    while (b >= 0 && key[order[b]] > key[v]) {
      order[b + 1] = order[b];
      --b;
    }
    order[b + 1] = v;
  }
  for (int a = 0; a < n; ++a) {
    if (a == 0 || key[order[a]] != key[order[a - 1]]) p.cells[p.count++] = 0;
    p.cells[p.count - 1] |= singleton(order[a]);
  }
  SplitterQueue queue;
  for (int i = 0; i < p.count; ++i) queue.push(p.cells[i]);
  refine(g, p, queue);
  return p;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    OrderedPartition root = initial_partition(g_);
    descend(root, 0);
  }

  /// Canonical adjacency rows, position-indexed.
  const std::array<VertexSet, kMaxVertices>& canonical_rows() const { return best_rows_; }

  /// v ↦ canonical position of v.
  Permutation labeling() const {
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) images[best_lab_[pos]] = pos;
    return Permutation::from_images(images);
  }

  /// Automorphisms discovered while pruning; they need not generate Aut(G).
  const std::vector<Permutation>& automorphisms_found() const { return generators_; }

 private:
  static constexpr int kNoJump = -1;

  int descend(const OrderedPartition& p, int depth) {
    if (p.count == n_) return leaf(p, depth);

    int target = -1;
    int target_size = kMaxVertices + 1;
    for (int i = 0; i < p.count; ++i) {
      const int s = set_size(p.cells[i]);
      if (s > 1 && s < target_size) {
        target = i;
        target_size = s;
      }
    }
    const VertexSet cell = p.cells[target];
    VertexSet tried = 0;
    VertexSet remaining = cell;
    while (remaining != 0) {
      const int v = lowest(remaining);
      remaining &= remaining - 1;
      if (tried != 0 && (orbit(v, depth) & tried) != 0) continue;

      OrderedPartition child = p;
      for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
      child.cells[target] = singleton(v);
      child.cells[target + 1] = cell & ~singleton(v);
      ++child.count;
      SplitterQueue queue;
      queue.push(singleton(v));
      refine(g_, child, queue);

      path_[depth] = v;
      const int jump = descend(child, depth + 1);
      tried |= singleton(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const OrderedPartition& p, int depth) {
    std::array<std::uint8_t, kMaxVertices> lab{};
    std::array<std::uint8_t, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(lowest(p.cells[i]));
      pos[lab[i]] = static_cast<std::uint8_t>(i);
    }
    std::array<VertexSet, kMaxVertices> rows{};
    for (int i = 0; i < n_; ++i) {
      VertexSet r = 0;
      for_each_vertex(g_.row(lab[i]), [&](int w) { r |= singleton(pos[w]); });
      rows[i] = r;
    }

    int cmp = have_best_ ? 0 : -1;
    for (int i = 0; i < n_ && cmp == 0; ++i) {
      if (rows[i] != best_rows_[i]) cmp = rows[i] < best_rows_[i] ? -1 : 1;
    }
    if (cmp < 0) {
      have_best_ = true;
      best_rows_ = rows;
      best_lab_ = lab;
      best_path_ = path_;
      best_depth_ = depth;
      return kNoJump;
    }
    if (cmp > 0) return kNoJump;

    // Equal matrices: lab[i] ↦ best_lab[i] is an automorphism that maps this
    // path onto the best path.
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) images[lab[i]] = best_lab_[i];
    Permutation gamma = Permutation::from_images(images);
    if (!gamma.is_identity()) generators_.push_back(gamma);

    const int limit = depth < best_depth_ ? depth : best_depth_;
    for (int level = 0; level < limit; ++level) {
      if (path_[level] != best_path_[level]) return level;
    }
    return kNoJump;
  }

  /// Orbit of v under the found automorphisms that fix path_[0..depth).
  VertexSet orbit(int v, int depth) const {
    VertexSet orb = singleton(v);
    std::vector<const Permutation*> fixing;
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int level = 0; level < depth && fixes; ++level) fixes = gen(path_[level]) == path_[level];
      if (fixes) fixing.push_back(&gen);
    }
    for (;;) {
      VertexSet next = orb;
      for (const Permutation* gen : fixing) next |= gen->apply(orb);
      if (next == orb) return orb;
      orb = next;
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::array<VertexSet, kMaxVertices> best_rows_{};
  std::array<std::uint8_t, kMaxVertices> best_lab_{};
  std::array<int, kMaxVertices> path_{};
  std::array<int, kMaxVertices> best_path_{};
  int best_depth_ = 0;
  std::vector<Permutation> generators_;
};

}  // namespace nbrecon::detail
