#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mengerian/clutter.hpp"
#include "mengerian/exact_matrix.hpp"

namespace mengerian {

/// Constraint numbering for Q(A) = {x >= 0, Ax >= 1} with A m x n:
/// 0..m-1 are the rows <A_i, x> >= 1, m..m+n-1 are x_j >= 0.
struct PolyhedronVertex {
  std::vector<Rational> coordinates;
  std::vector<std::size_t> tight;  // every constraint met with equality
  std::vector<std::size_t> basis;  // n of them, linearly independent
  bool integral() const;
  std::size_t tight_rows(std::size_t m) const;  // tight constraints among 0..m-1
};

struct VertexEnumerationLimits {
  std::size_t max_columns = 24;
  std::uint64_t max_rays = 2'000'000;  // intermediate cone size
};

/// Every vertex of Q(A), sorted by coordinates. A must be 0/1.
///
/// Double description: the extreme rays of the homogenized cone are built row
/// by row in exact integer arithmetic (int64, redone in GMP on overflow). Each
/// vertex carries its tight set and the first n independent tight constraints.
std::vector<PolyhedronVertex> covering_polyhedron_vertices(const ExactMatrix& a,
                                                           const VertexEnumerationLimits& limits = {});

struct PointCheck {
  bool feasible = false;
  std::vector<std::size_t> tight;
  std::size_t tight_rank = 0;
  bool is_vertex = false;  // feasible and tight constraints have rank n
};

/// Independent vertex test for a given point (Gaussian elimination over Q).
PointCheck check_point(const ExactMatrix& a, std::span<const Rational> x);

struct IdealResult {
  bool ideal = true;
  std::optional<PolyhedronVertex> fractional_vertex;
  std::size_t vertex_count = 0;
  std::size_t fractional_count = 0;
};

/// Q(A) integral? The reported fractional vertex is the one with the most tight
/// hyperedge rows, ties going to the lexicographically largest coordinates.
/// The empty clutter is ideal. Throws std::invalid_argument on the unit clutter.
IdealResult is_ideal(const Clutter& c, const VertexEnumerationLimits& limits = {});

}  // namespace mengerian
