#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "nbrecon/graph.hpp"

namespace nbrecon {

// Labeled graphs on n vertices are indexed by the bit vector over the upper
// triangle of the adjacency matrix, pairs (i, j) with i <= j (i < j when loops
// are excluded) taken row by row. The first pair is the most significant bit,
// so increasing indices walk the bit vectors in lexicographic order.

inline int pair_count(int n, bool loops) { return loops ? n * (n + 1) / 2 : n * (n - 1) / 2; }

inline std::uint64_t labeled_graph_count(int n, bool loops) {
  const int m = pair_count(n, loops);
  if (m >= 64) throw CapacityError("too many labeled graphs to index on " + std::to_string(n) + " vertices");
  return std::uint64_t{1} << m;
}

inline Graph labeled_graph_at(int n, bool loops, std::uint64_t index) {
  const int m = pair_count(n, loops);
  Graph g(n);
  int bit = m - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = loops ? i : i + 1; j < n; ++j, --bit) {
      if (((index >> bit) & 1U) != 0) g.add_edge(i, j);
    }
  }
  return g;
}

/// Inverse of labeled_graph_at. Throws UsageError for a looped graph in loopless mode.
inline std::uint64_t labeled_graph_index(const Graph& g, bool loops) {
  if (!loops && g.loops() != 0) throw UsageError("graph has loops but loopless indexing was requested");
  const int n = g.order();
  std::uint64_t index = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = loops ? i : i + 1; j < n; ++j) index = (index << 1U) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return index;
}

/// A lazy stream over a contiguous index range of labeled graphs.
class LabeledGraphs {
 public:
  LabeledGraphs(int n, bool loops, std::uint64_t first, std::uint64_t last)
      : n_(n), loops_(loops), first_(first), last_(last) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, bool loops, std::uint64_t index) : n_(n), loops_(loops), index_(index) {}

    Graph operator*() const { return labeled_graph_at(n_, loops_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    std::uint64_t index() const { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    int n_ = 0;
    bool loops_ = false;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {n_, loops_, first_}; }
  iterator end() const { return {n_, loops_, last_}; }
  std::uint64_t size() const { return last_ - first_; }

 private:
  int n_;
  bool loops_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// Every labeled graph on n vertices exactly once. Default guard: n <= 6 with
/// loops, n <= 7 without.
inline LabeledGraphs enumerate_labeled_graphs(int n, bool loops, Budget budget = {}) {
  if (n < 0) throw UsageError("negative vertex count");
  budget.require(n <= (loops ? 6 : 7), "enumeration of labeled graphs on " + std::to_string(n) +
                                           " vertices exceeds the default budget");
  return {n, loops, 0, labeled_graph_count(n, loops)};
}

/// Index sub-range [first, last) for sharding a stream across workers.
inline LabeledGraphs enumerate_labeled_graphs(int n, bool loops, std::uint64_t first, std::uint64_t last) {
  const std::uint64_t total = labeled_graph_count(n, loops);
  if (first > last || last > total) throw UsageError("enumeration range outside 0.." + std::to_string(total));
  return {n, loops, first, last};
}

}  // namespace nbrecon
