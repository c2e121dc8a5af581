#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mengerian {

/// A set of vertices packed into one machine word. Vertex indices are 0-based
/// and bounded by kMaxVertices.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

constexpr VertexSet singleton(std::size_t v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(std::size_t n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, std::size_t v) { return (s >> v) & 1U; }

constexpr std::size_t cardinality(VertexSet s) {
  return static_cast<std::size_t>(std::popcount(s));
}

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

constexpr std::size_t lowest(VertexSet s) {
  return static_cast<std::size_t>(std::countr_zero(s));
}

inline VertexSet make_set(std::initializer_list<std::size_t> vs) {
  VertexSet s = 0;
  for (auto v : vs) s |= singleton(v);
  return s;
}

inline std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

/// Lexicographic order on the sorted member lists ({1,2} < {1,2,3} < {1,3}).
inline bool lex_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    auto x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Remaps every member v of s to perm[v].
inline VertexSet permute(VertexSet s, const std::vector<std::size_t>& perm) {
  VertexSet out = 0;
  for (; s != 0; s &= s - 1) out |= singleton(perm[lowest(s)]);
  return out;
}

}  // namespace mengerian
