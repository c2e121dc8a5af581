#include "mengerian/classify.hpp"

#include <stdexcept>
#include <string>

#include "mengerian/errors.hpp"

namespace mengerian {

std::string_view to_string(Clause clause) {
  switch (clause) {
    case Clause::four_vertices: return "FOUR_VERTICES";
    case Clause::c8: return "C8";
    case Clause::path_with_double_stars: return "PATH_WITH_DOUBLE_STARS";
    case Clause::star_plus_edge: return "STAR_PLUS_EDGE";
    case Clause::not_mengerian: return "NOT_MENGERIAN";
  }
  return "?";
}

std::string_view to_string(Trace trace) {
  switch (trace) {
    case Trace::empty: return "EMPTY";
    case Trace::tu_shortcut: return "TU_SHORTCUT";
    case Trace::non_ideal: return "NON_IDEAL";
    case Trace::power_equality: return "POWER_EQUALITY";
  }
  return "?";
}

bool is_path_with_double_stars(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0 || !is_connected(g) || g.num_edges() + 1 != n) return false;
  std::size_t near_leaf = 0;
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexSet s = g.neighbors(v); s != 0; s &= s - 1) {
      if (g.degree(lowest(s)) == 1) {
        ++near_leaf;
        break;
      }
    }
  }
  return near_leaf <= 2;
}

bool is_star_plus_edge(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3 || !is_connected(g) || g.num_edges() != n) return false;
  for (std::size_t c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    for (VertexSet s = g.neighbors(c); s != 0; s &= s - 1) {
      auto u = lowest(s);
      if (g.degree(u) != 2) continue;
      for (VertexSet r = g.neighbors(u) & ~singleton(c); r != 0; r &= r - 1) {
        auto w = lowest(r);
        if (g.adjacent(c, w) && g.degree(w) == 2) return true;
      }
    }
  }
  return false;
}

ClassVerdict classify_mengerian(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("classify_mengerian: graph is not connected");
  const std::size_t n = g.num_vertices();
  if (n <= 4) return {true, Clause::four_vertices, "at most four vertices"};
  if (n == 8 && g.num_edges() == 8 && canonical_form(g) == canonical_form(make_family("cycle", std::vector<int>{8}))) {
    return {true, Clause::c8, "isomorphic to the 8-cycle"};
  }
  if (is_path_with_double_stars(g)) return {true, Clause::path_with_double_stars, "tree with at most two vertices next to leaves"};
  if (is_star_plus_edge(g)) return {true, Clause::star_plus_edge, "star with one edge between two leaves"};
  return {false, Clause::not_mengerian, "no clause applies"};
}

DecisionReport decide_mengerian_exact(const Graph& g, int t, const DecisionLimits& limits) {
  if (t < 1) throw std::invalid_argument("decide_mengerian_exact: t must be at least 1");
  DecisionReport r;
  r.graph = g;
  r.t = t;
  r.connected = is_connected(g);
  r.hypergraph = Clutter(g.num_vertices());
  auto give_up = [&](const std::string& why) {
    r.complete = false;
    r.incomplete_reason = why;
    r.trace.reset();
    r.mengerian.reset();
    r.agreement.reset();
  };

  if (r.connected && t == 3) r.classifier = classify_mengerian(g);
  if (g.num_vertices() > limits.max_vertices) {
    give_up("graph has " + std::to_string(g.num_vertices()) + " vertices; cap is " + std::to_string(limits.max_vertices));
    return r;
  }
  r.hypergraph = build_path_hypergraph(g, t);
  const Clutter& h = r.hypergraph;
  if (h.num_edges() > limits.max_edges) {
    give_up("hypergraph has " + std::to_string(h.num_edges()) + " edges; cap is " + std::to_string(limits.max_edges));
    return r;
  }

  if (h.is_empty()) {
    r.trace = Trace::empty;
    r.mengerian = true;
  } else {
    r.konig.cover = minimum_cover(h);
    r.konig.tau = cardinality(r.konig.cover);
    r.konig.matching = maximum_matching(h);
    r.konig.nu = r.konig.matching.size();
    try {
      r.tu = is_totally_unimodular(incidence_matrix(h));
      if (r.tu.totally_unimodular) {
        r.trace = Trace::tu_shortcut;
        r.mengerian = true;
      } else {
        r.ideal = is_ideal(h, limits.vertices);
        if (!r.ideal->ideal) {
          r.trace = Trace::non_ideal;
          r.mengerian = false;
        }
      }
      if (!r.trace || limits.force_power_equality) {
        r.ntf = is_normally_torsion_free(h, limits.max_power);
        if (!r.trace) {
          r.trace = Trace::power_equality;
          r.mengerian = r.ntf->normally_torsion_free;
        }
      }
      if (limits.packing_max_n > 0 && h.num_vertices() <= limits.packing_max_n) {
        r.packing = check_packing(h, limits.packing_max_n);
      }
    } catch (const ResourceLimitError& e) {
      give_up(e.what());
      return r;
    }
  }
  if (r.classifier && r.mengerian) r.agreement = r.classifier->mengerian == *r.mengerian;
  return r;
}

}  // namespace mengerian
