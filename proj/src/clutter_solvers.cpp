#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "mengerian/clutter.hpp"
#include "mengerian/errors.hpp"

namespace mengerian {

namespace {

void require_not_unit(const Clutter& c, const char* what) {
  if (c.is_unit()) throw std::invalid_argument(std::string(what) + ": undefined for the unit clutter");
}

void require_cost(const Clutter& c, const MultiplicityVector& cost) {
  if (cost.size() != c.num_vertices()) throw std::invalid_argument("cost vector has wrong length");
}

// Minimum-cost transversal. Branches on the vertices of the uncovered edge
// with the fewest admissible vertices; vertices tried earlier in a branch are
// banned from its siblings. Lower bound: greedily chosen pairwise disjoint
// uncovered edges, each charged its cheapest admissible vertex.
class CoverSearch {
 public:
  explicit CoverSearch(const MultiplicityVector& cost) : cost_(cost) {}

  WeightedCover run(std::vector<VertexSet> edges) {
    VertexSet free_vertices = 0;
    for (std::size_t v = 0; v < cost_.size(); ++v)
      if (cost_[v] == 0) free_vertices |= singleton(v);
    VertexSet chosen = 0;
    std::erase_if(edges, [&](VertexSet e) {
      if (e & free_vertices) {
        chosen |= singleton(lowest(e & free_vertices));
        return true;
      }
      return false;
    });
    best_ = std::numeric_limits<std::uint64_t>::max();
    search(edges, chosen, 0, 0);
    return {best_, best_set_};
  }

 private:
  std::uint64_t cheapest(VertexSet s) const {
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (; s != 0; s &= s - 1) m = std::min(m, cost_[lowest(s)]);
    return m;
  }

  void search(const std::vector<VertexSet>& edges, VertexSet chosen, VertexSet banned, std::uint64_t cost) {
    if (edges.empty()) {
      if (cost < best_) {
        best_ = cost;
        best_set_ = chosen;
      }
      return;
    }
    std::uint64_t bound = cost;
    VertexSet used = 0;
    const VertexSet* branch = nullptr;
    std::size_t branch_width = kMaxVertices + 1;
    for (const auto& e : edges) {
      auto allowed = e & ~banned;
      if (allowed == 0) return;
      if (cardinality(allowed) < branch_width) {
        branch_width = cardinality(allowed);
        branch = &e;
      }
      if ((e & used) == 0) {
        bound += cheapest(allowed);
        used |= e;
      }
    }
    if (bound >= best_) return;
    auto candidates = members(*branch & ~banned);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return cost_[a] < cost_[b]; });
    std::vector<VertexSet> rest;
    for (auto v : candidates) {
      rest.clear();
      for (auto e : edges)
        if (!contains(e, v)) rest.push_back(e);
      search(rest, chosen | singleton(v), banned, cost + cost_[v]);
      banned |= singleton(v);
    }
  }

  const MultiplicityVector& cost_;
  std::uint64_t best_ = 0;
  VertexSet best_set_ = 0;
};

// Maximum matching: branch on a vertex of minimum degree, either matching it
// through one of its edges or leaving it unmatched.
class MatchingSearch {
 public:
  std::vector<VertexSet> run(const std::vector<VertexSet>& edges) {
    best_.clear();
    std::vector<VertexSet> current;
    search(edges, current);
    return best_;
  }

 private:
  void search(const std::vector<VertexSet>& edges, std::vector<VertexSet>& current) {
    if (current.size() > best_.size()) best_ = current;
    if (edges.empty()) return;
    VertexSet cover = 0;
    std::size_t smallest = kMaxVertices;
    for (auto e : edges) {
      cover |= e;
      smallest = std::min(smallest, cardinality(e));
    }
    auto bound = current.size() + std::min(edges.size(), cardinality(cover) / smallest);
    if (bound <= best_.size()) return;

    std::size_t pivot = 0, pivot_degree = edges.size() + 1;
    for (VertexSet s = cover; s != 0; s &= s - 1) {
      auto v = lowest(s);
      auto d = static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](VertexSet e) { return contains(e, v); }));
      if (d < pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    std::vector<VertexSet> rest;
    for (auto e : edges) {
      if (!contains(e, pivot)) continue;
      rest.clear();
      for (auto f : edges)
        if ((f & e) == 0) rest.push_back(f);
      current.push_back(e);
      search(rest, current);
      current.pop_back();
    }
    rest.clear();
    for (auto f : edges)
      if (!contains(f, pivot)) rest.push_back(f);
    search(rest, current);
  }

  std::vector<VertexSet> best_;
};

// Integer packing with vertex capacities: edges are visited in order and each
// gets a multiplicity from its largest feasible value down to 0.
class PackingSearch {
 public:
  PackingSearch(const std::vector<VertexSet>& edges, const MultiplicityVector& cost)
      : edges_(edges), caps_(cost.values), y_(edges.size(), 0), best_y_(edges.size(), 0) {}

  IntegerPacking run() {
    search(0, 0);
    return {best_, best_y_};
  }

 private:
  // Valid upper bound on what edges[from..] can still add: capacity of a
  // greedy transversal of the still-usable edges, and total capacity divided
  // by the smallest edge size.
  std::uint64_t bound(std::size_t from) const {
    VertexSet cover = 0, reach = 0;
    std::uint64_t cover_cap = 0;
    std::size_t smallest = kMaxVertices;
    for (std::size_t i = from; i < edges_.size(); ++i) {
      auto e = edges_[i];
      if (room(e) == 0) continue;
      reach |= e;
      smallest = std::min(smallest, cardinality(e));
      if (e & cover) continue;
      std::size_t pick = lowest(e);
      for (VertexSet s = e; s != 0; s &= s - 1)
        if (caps_[lowest(s)] < caps_[pick]) pick = lowest(s);
      cover |= singleton(pick);
      cover_cap += caps_[pick];
    }
    if (reach == 0) return 0;
    std::uint64_t total = 0;
    for (VertexSet s = reach; s != 0; s &= s - 1) total += caps_[lowest(s)];
    return std::min(cover_cap, total / smallest);
  }

  std::uint64_t room(VertexSet e) const {
    std::uint64_t r = std::numeric_limits<std::uint64_t>::max();
    for (VertexSet s = e; s != 0; s &= s - 1) r = std::min(r, caps_[lowest(s)]);
    return r;
  }

  void search(std::size_t i, std::uint64_t value) {
    if (value > best_) {
      best_ = value;
      best_y_ = y_;
    }
    if (i == edges_.size() || value + bound(i) <= best_) return;
    auto e = edges_[i];
    for (auto take = room(e) + 1; take-- > 0;) {
      for (VertexSet s = e; s != 0; s &= s - 1) caps_[lowest(s)] -= take;
      y_[i] = take;
      search(i + 1, value + take);
      y_[i] = 0;
      for (VertexSet s = e; s != 0; s &= s - 1) caps_[lowest(s)] += take;
      if (value + bound(i) <= best_) break;
    }
  }

  const std::vector<VertexSet>& edges_;
  std::vector<std::uint64_t> caps_;
  std::vector<std::uint64_t> y_;
  std::vector<std::uint64_t> best_y_;
  std::uint64_t best_ = 0;
};

}  // namespace

WeightedCover weighted_cover(const Clutter& c, const MultiplicityVector& cost) {
  require_not_unit(c, "weighted_cover");
  require_cost(c, cost);
  return CoverSearch(cost).run({c.edges().begin(), c.edges().end()});
}

std::uint64_t weighted_cover_min(const Clutter& c, const MultiplicityVector& cost) {
  return weighted_cover(c, cost).value;
}

VertexSet minimum_cover(const Clutter& c) {
  return weighted_cover(c, MultiplicityVector::constant(c.num_vertices(), 1)).cover;
}

std::size_t tau(const Clutter& c) { return cardinality(minimum_cover(c)); }

std::vector<VertexSet> maximum_matching(const Clutter& c) {
  require_not_unit(c, "maximum_matching");
  return MatchingSearch().run({c.edges().begin(), c.edges().end()});
}

std::size_t nu(const Clutter& c) { return maximum_matching(c).size(); }

std::vector<VertexSet> minimal_covers(const Clutter& c) {
  require_not_unit(c, "minimal_covers");
  std::vector<VertexSet> covers{0};
  for (auto e : c.edges()) {
    std::vector<VertexSet> next;
    for (auto t : covers) {
      if (t & e) {
        next.push_back(t);
      } else {
        for (VertexSet s = e; s != 0; s &= s - 1) next.push_back(t | singleton(lowest(s)));
      }
    }
    std::sort(next.begin(), next.end(), [](VertexSet a, VertexSet b) {
      return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (auto t : next) {
      if (std::none_of(covers.begin(), covers.end(), [t](VertexSet u) { return is_subset(u, t); })) covers.push_back(t);
    }
  }
  std::sort(covers.begin(), covers.end(), [](VertexSet a, VertexSet b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : lex_less(a, b);
  });
  return covers;
}

bool has_konig(const Clutter& c) { return tau(c) == nu(c); }

PackingResult check_packing(const Clutter& c, std::size_t max_n) {
  require_not_unit(c, "check_packing");
  std::size_t n = c.num_vertices();
  if (n > max_n) {
    throw ResourceLimitError("packing check: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(max_n));
  }
  PackingResult result;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    VertexSet d = 0, k = 0;
    auto x = code;
    for (std::size_t v = 0; v < n; ++v, x /= 3) {
      if (x % 3 == 1) d |= singleton(v);
      if (x % 3 == 2) k |= singleton(v);
    }
    auto m = minor(c, d, k);
    if (m.is_unit()) continue;
    ++result.minors_checked;
    if (!has_konig(m)) {
      result.holds = false;
      result.witness = Minor{d, k, std::move(m)};
      return result;
    }
  }
  return result;
}

bool has_packing(const Clutter& c) { return check_packing(c, kMaxVertices).holds; }

IntegerPacking integer_packing(const Clutter& c, const MultiplicityVector& cost) {
  require_not_unit(c, "integer_packing");
  require_cost(c, cost);
  std::vector<VertexSet> edges(c.edges().begin(), c.edges().end());
  return PackingSearch(edges, cost).run();
}

std::uint64_t max_integer_packing(const Clutter& c, const MultiplicityVector& cost) {
  return integer_packing(c, cost).value;
}

MfmcProbe mengerian_bounded(const Clutter& c, std::uint64_t cmax) {
  require_not_unit(c, "mengerian_bounded");
  if (cmax == 0) throw std::invalid_argument("mengerian_bounded: cmax must be positive");
  std::size_t n = c.num_vertices();
  MfmcProbe probe;
  MultiplicityVector cost = MultiplicityVector::constant(n, 0);
  while (true) {
    ++probe.costs_checked;
    auto cover = weighted_cover_min(c, cost);
    auto pack = max_integer_packing(c, cost);
    if (cover > pack) {
      probe.refuted = true;
      probe.cost = cost;
      probe.cover_value = cover;
      probe.packing_value = pack;
      return probe;
    }
    std::size_t i = n;
    while (i > 0 && cost.values[i - 1] == cmax) cost.values[--i] = 0;
    if (i == 0) break;
    ++cost.values[i - 1];
  }
  return probe;
}

}  // namespace mengerian
