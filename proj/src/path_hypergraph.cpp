#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mengerian/clutter.hpp"
#include "mengerian/graph.hpp"

namespace mengerian {

namespace {

void extend(const Graph& g, std::size_t last, VertexSet used, int remaining, std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(used);
    return;
  }
  for (VertexSet s = g.neighbors(last) & ~used; s != 0; s &= s - 1) {
    auto next = lowest(s);
    extend(g, next, used | singleton(next), remaining - 1, out);
  }
}

}  // namespace

Clutter build_path_hypergraph(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("path length t must be >= 1");
  std::vector<VertexSet> sets;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) extend(g, v, singleton(v), t, sets);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return minimalize(std::move(sets), g.num_vertices());
}

}  // namespace mengerian
