#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mengerian/vertex_set.hpp"

namespace mengerian {

class Clutter;

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;

  /// Inserts {u,v}. Returns false if the edge was already present.
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  bool add_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const { return contains(adj_[u], v); }
  VertexSet neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return cardinality(adj_[v]); }

  /// Edges as (u,v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Line-oriented "u v" pairs with 1-based labels (";" also ends a line). "#"
/// starts a comment and an optional "n <count>" header fixes the vertex count.
/// Duplicate edges are dropped and reported through `warnings` when given.
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string to_edge_list(const Graph& g);

/// graph6 (n < 63 short form and the 4-byte "~" form); a leading ">>graph6<<"
/// header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Standard families. Vertex numbering:
///   path k          0-1-...-(k-1)
///   cycle k         path plus {k-1, 0}
///   star k          center 0, leaves 1..k
///   double_star p q centers 0,1 adjacent; leaves 2..p+1 on 0, then q leaves on 1
///   spider l1 l2 .. center 0, legs numbered outward one after another
///   star_plus_edge k  star k plus the edge {1,2}
///   complete k      K_k
Graph make_family(std::string_view name, std::span<const int> params);

/// "name:p1,p2,..." e.g. "cycle:8", "spider:2,1,1".
Graph parse_family_spec(std::string_view spec);

bool is_connected(const Graph& g);

/// Canonical label: graph6 string of the relabeling whose upper-triangle
/// adjacency bits (graph6 order) are lexicographically minimal over all n!
/// vertex permutations. Throws std::invalid_argument above max_n.
std::string canonical_form(const Graph& g, std::size_t max_n = 9);

bool are_isomorphic(const Graph& a, const Graph& b, std::size_t max_n = 9);

/// Undirected DOT. Non-empty annotations are shown under the vertex name.
std::string to_dot(const Graph& g, std::span<const std::string> annotations = {});

/// Hyperedges are the (t+1)-sets of vertices that carry a path with t edges
/// (spanning the set, not necessarily induced).
Clutter build_path_hypergraph(const Graph& g, int t);

}  // namespace mengerian
