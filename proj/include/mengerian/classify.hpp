#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mengerian/clutter.hpp"
#include "mengerian/covering_polyhedron.hpp"
#include "mengerian/exact_matrix.hpp"
#include "mengerian/graph.hpp"
#include "mengerian/monomial_ideal.hpp"

namespace mengerian {

enum class Clause { four_vertices, c8, path_with_double_stars, star_plus_edge, not_mengerian };
std::string_view to_string(Clause clause);

struct ClassVerdict {
  bool mengerian = false;
  Clause clause = Clause::not_mengerian;
  std::string note;
};

/// Tree in which at most two vertices are adjacent to leaves.
bool is_path_with_double_stars(const Graph& g);
/// Star with one extra edge between two of its leaves (K3 included).
bool is_star_plus_edge(const Graph& g);

/// Graph-class side of the 4-uniform classification. Clauses are tried in the
/// order |V| <= 4, C8, path with double stars, star plus edge.
/// Throws std::invalid_argument for disconnected graphs.
ClassVerdict classify_mengerian(const Graph& g);

enum class Trace { empty, tu_shortcut, non_ideal, power_equality };
std::string_view to_string(Trace trace);

struct DecisionLimits {
  std::size_t max_vertices = 16;
  std::size_t max_edges = 128;
  std::uint32_t max_power = 12;
  std::size_t packing_max_n = 8;  // 0 skips the packing check
  VertexEnumerationLimits vertices;
  bool force_power_equality = false;  // run NTF even after a TU/non-ideal verdict
};

struct KonigResult {
  std::size_t tau = 0;
  std::size_t nu = 0;
  VertexSet cover = 0;
  std::vector<VertexSet> matching;
  bool holds() const { return tau == nu; }
};

struct DecisionReport {
  Graph graph;
  int t = 3;
  Clutter hypergraph;
  bool connected = false;

  UnimodularityResult tu;
  std::optional<IdealResult> ideal;
  KonigResult konig;
  std::optional<PackingResult> packing;
  std::optional<TorsionFreeResult> ntf;

  std::optional<Trace> trace;
  std::optional<bool> mengerian;
  std::optional<ClassVerdict> classifier;
  std::optional<bool> agreement;

  bool complete = true;
  std::string incomplete_reason;
};

/// Exact Mengerian decision for H_t(g): empty -> TU -> fractional vertex ->
/// power equality. The classifier runs alongside when g is connected and t = 3.
/// Cap violations are reported via `complete`, never approximated.
DecisionReport decide_mengerian_exact(const Graph& g, int t, const DecisionLimits& limits = {});

}  // namespace mengerian
