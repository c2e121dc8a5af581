#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mengerian/exact_matrix.hpp"
#include "mengerian/vertex_set.hpp"

namespace mengerian {

/// Identity of a vertex through deletions and duplications: the original
/// vertex index and the copy number (0 for the original itself).
struct VertexLabel {
  std::size_t original = 0;
  std::size_t copy = 0;
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// Simple hypergraph: an antichain of hyperedges over vertices 0..n-1.
/// The unit clutter (the one containing the empty edge) is a separate state;
/// it stands for the unit ideal and has no edge list.
class Clutter {
 public:
  Clutter() = default;
  /// Empty clutter (no hyperedges) on n vertices.
  explicit Clutter(std::size_t n);

  static Clutter unit(std::size_t n);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_unit() const { return unit_; }
  bool is_empty() const { return !unit_ && edges_.empty(); }

  /// Sorted in lexicographic order of the member lists.
  std::span<const VertexSet> edges() const { return edges_; }
  std::optional<std::size_t> uniformity() const;
  VertexSet support() const;

  const std::vector<VertexLabel>& labels() const { return labels_; }
  /// "x3" for originals, "x3.2" for the second extra copy of x3 (1-based).
  std::string vertex_name(std::size_t v) const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  friend Clutter minimalize(std::vector<VertexSet> edges, std::vector<VertexLabel> labels);

  std::vector<VertexSet> edges_;
  std::vector<VertexLabel> labels_;
  bool unit_ = false;
};

/// Drops duplicates and every edge strictly containing another; yields the
/// unit clutter if the empty edge is present.
Clutter minimalize(std::vector<VertexSet> edges, std::size_t n);
Clutter minimalize(std::vector<VertexSet> edges, std::vector<VertexLabel> labels);

/// m x n 0/1 matrix, rows in edge order, columns in vertex order.
ExactMatrix incidence_matrix(const Clutter& c);

/// Removes every edge through v, then the vertex itself.
Clutter delete_vertex(const Clutter& c, std::size_t v);
/// Removes v from every edge, then the vertex itself, then minimalizes.
Clutter contract_vertex(const Clutter& c, std::size_t v);
/// Deletes `deleted`, contracts `contracted` (disjoint sets); the result lives
/// on the remaining vertices, in their original order.
Clutter minor(const Clutter& c, VertexSet deleted, VertexSet contracted);

struct Minor {
  VertexSet deleted = 0;
  VertexSet contracted = 0;
  Clutter clutter;
};

/// All 3^n minors, indexed by the ternary digit of each vertex (0 keep,
/// 1 delete, 2 contract) with vertex 0 least significant.
std::vector<Minor> minors(const Clutter& c);

/// Nonnegative integer weight per vertex.
struct MultiplicityVector {
  std::vector<std::uint64_t> values;

  static MultiplicityVector constant(std::size_t n, std::uint64_t value);
  std::size_t size() const { return values.size(); }
  std::uint64_t operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// Replaces vertex i by a_i parallel copies (deleting it when a_i = 0).
Clutter duplicate(const Clutter& c, const MultiplicityVector& a);

/// Minimum vertex cover (exact branch-and-bound).
VertexSet minimum_cover(const Clutter& c);
std::size_t tau(const Clutter& c);

/// Maximum set of pairwise disjoint edges (exact branch-and-bound).
std::vector<VertexSet> maximum_matching(const Clutter& c);
std::size_t nu(const Clutter& c);

/// All inclusion-minimal vertex covers, ordered by size then lexicographically.
std::vector<VertexSet> minimal_covers(const Clutter& c);

bool has_konig(const Clutter& c);

struct PackingResult {
  bool holds = true;
  std::optional<Minor> witness;  // first non-unit minor failing Konig
  std::uint64_t minors_checked = 0;
};

/// Konig on c and on every non-unit minor. Throws ResourceLimitError above max_n.
PackingResult check_packing(const Clutter& c, std::size_t max_n = 10);
bool has_packing(const Clutter& c);

struct WeightedCover {
  std::uint64_t value = 0;
  VertexSet cover = 0;
};
/// min <cost, x> over 0/1 covers x.
WeightedCover weighted_cover(const Clutter& c, const MultiplicityVector& cost);
std::uint64_t weighted_cover_min(const Clutter& c, const MultiplicityVector& cost);

struct IntegerPacking {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> multiplicity;  // per edge
};
/// max sum(y) over integer y >= 0 with y^T A <= cost.
IntegerPacking integer_packing(const Clutter& c, const MultiplicityVector& cost);
std::uint64_t max_integer_packing(const Clutter& c, const MultiplicityVector& cost);

struct MfmcProbe {
  bool refuted = false;
  std::optional<MultiplicityVector> cost;  // first violating cost vector
  std::uint64_t cover_value = 0;
  std::uint64_t packing_value = 0;
  std::uint64_t costs_checked = 0;
};

/// Scans {0..cmax}^n in lexicographic order (last vertex fastest) for a cost
/// where the integer min-cover exceeds the integer max-packing. Only refutes.
MfmcProbe mengerian_bounded(const Clutter& c, std::uint64_t cmax);

/// "n <count>" then one line of 1-based vertices per edge; "unit" marks the
/// unit clutter.
std::string to_text(const Clutter& c);
Clutter parse_clutter_text(std::string_view text);

std::vector<std::size_t> edge_members_1based(VertexSet e);

}  // namespace mengerian
