#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nbrecon/bits.hpp"
#include "nbrecon/errors.hpp"

namespace nbrecon {

/// A bijection on {0, ..., n-1}, n <= 64, stored inline as an image vector.
///
/// Ordering is lexicographic on the image vector, which is what "lowest
/// index first" and "lexicographically least representative" refer to
/// throughout the library.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    check_size(n);
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.image_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Throws UsageError unless `images` is a bijection on 0..size-1.
  static Permutation from_images(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    check_size(n);
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    VertexSet seen = 0;
    for (int i = 0; i < n; ++i) {
      const int v = images[i];
      if (v < 0 || v >= n) {
        throw UsageError("permutation image " + std::to_string(v) + " out of range for size " +
                         std::to_string(n));
      }
      if (contains(seen, v)) {
        throw UsageError("permutation repeats image " + std::to_string(v));
      }
      seen |= singleton(v);
      p.image_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  int size() const { return size_; }

  int operator()(int v) const { return image_[static_cast<std::size_t>(v)]; }
  int operator[](int v) const { return image_[static_cast<std::size_t>(v)]; }

  std::vector<int> images() const { return {image_.begin(), image_.begin() + size_}; }

  Permutation inverse() const {
    Permutation q;
    q.size_ = size_;
    for (int i = 0; i < size_; ++i) q.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return q;
  }

  bool is_identity() const {
    for (int i = 0; i < size_; ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  /// Image of a vertex set.
  VertexSet apply(VertexSet s) const {
    VertexSet out = 0;
    for_each_vertex(s, [&](int v) { out |= singleton(image_[v]); });
    return out;
  }

  /// Cycle lengths, in order of each cycle's smallest element.
  std::vector<int> cycle_lengths() const {
    std::vector<int> lengths;
    VertexSet seen = 0;
    for (int i = 0; i < size_; ++i) {
      if (contains(seen, i)) continue;
      int len = 0;
      for (int v = i; !contains(seen, v); v = image_[v]) {
        seen |= singleton(v);
        ++len;
      }
      lengths.push_back(len);
    }
    return lengths;
  }

  /// Order in the symmetric group: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t m = 1;
    for (int len : cycle_lengths()) m = std::lcm(m, static_cast<std::uint64_t>(len));
    return m;
  }

  /// p^k for any integer k (negative powers go through the inverse).
  Permutation pow(long long k) const {
    const std::uint64_t ord = order();
    long long e = k % static_cast<long long>(ord);
    if (e < 0) e += static_cast<long long>(ord);
    Permutation result = identity(size_);
    Permutation base = *this;
    auto exp = static_cast<std::uint64_t>(e);
    while (exp != 0) {
      if ((exp & 1U) != 0) result = compose(base, result);
      base = compose(base, base);
      exp >>= 1U;
    }
    return result;
  }

  /// outer ∘ inner, i.e. v ↦ outer(inner(v)).
  friend Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size_ != inner.size_) throw UsageError("composing permutations of different sizes");
    Permutation r;
    r.size_ = outer.size_;
    for (int i = 0; i < r.size_; ++i) r.image_[i] = outer.image_[inner.image_[i]];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.image_ <=> b.image_;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (int i = 0; i < size_; ++i) h = h * 131 + image_[i];
    return h;
  }

 private:
  static void check_size(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw CapacityError("permutation size " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxVertices));
    }
  }

  std::array<std::uint8_t, kMaxVertices> image_{};
  std::uint8_t size_ = 0;
};

}  // namespace nbrecon

template <>
struct std::hash<nbrecon::Permutation> {
  std::size_t operator()(const nbrecon::Permutation& p) const noexcept { return p.hash(); }
};
