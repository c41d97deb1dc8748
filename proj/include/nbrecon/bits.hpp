#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nbrecon {

/// Hard cap on vertex count: one adjacency row per 64-bit word.
inline constexpr int kMaxVertices = 64;

/// A set of vertices drawn from 0..63, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr bool contains(VertexSet s, int v) { return ((s >> v) & 1U) != 0; }

/// {0, 1, ..., n-1}
constexpr VertexSet first_n(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

template <class F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> to_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace nbrecon
