#include <random>

#include "doctest.h"
#include "mengerian/clutter.hpp"
#include "mengerian/errors.hpp"
#include "mengerian/graph.hpp"
#include "oracles.hpp"

using namespace mengerian;

namespace {

Clutter h3(const char* spec) { return build_path_hypergraph(parse_family_spec(spec), 3); }

Clutter random_clutter(std::mt19937& rng, std::size_t n, std::size_t max_edges) {
  std::uniform_int_distribution<VertexSet> pick(1, full_set(n));
  std::uniform_int_distribution<std::size_t> count(1, max_edges);
  std::vector<VertexSet> edges(count(rng));
  for (auto& e : edges) e = pick(rng);
  return minimalize(edges, n);
}

MultiplicityVector random_cost(std::mt19937& rng, std::size_t n, std::uint64_t cmax) {
  std::uniform_int_distribution<std::uint64_t> d(0, cmax);
  MultiplicityVector a;
  for (std::size_t i = 0; i < n; ++i) a.values.push_back(d(rng));
  return a;
}

std::set<VertexSet> edge_set(const Clutter& c) { return {c.edges().begin(), c.edges().end()}; }

}  // namespace

TEST_CASE("minimalize") {
  auto c = minimalize({make_set({0, 1}), make_set({0, 1, 2})}, 3);
  CHECK(edge_set(c) == std::set<VertexSet>{make_set({0, 1})});
  auto c8 = h3("cycle:8");
  CHECK(minimalize(oracle::edge_list(c8), 8) == c8);
  CHECK(minimalize({0, make_set({0})}, 2).is_unit());
}

TEST_CASE("incidence matrix") {
  auto a = incidence_matrix(h3("cycle:8"));
  CHECK(a.rows() == 8);
  CHECK(a.cols() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < 8; ++j) ones += a(i, j) == 1;
    CHECK(ones == 4);
  }
  CHECK(incidence_matrix(Clutter(3)).rows() == 0);
  CHECK(incidence_matrix(Clutter(3)).cols() == 3);
  auto row = incidence_matrix(minimalize({make_set({0, 1, 2, 3})}, 4));
  CHECK(row == ExactMatrix::from_rows({{1, 1, 1, 1}}));
  CHECK_THROWS(incidence_matrix(Clutter::unit(2)));
}

TEST_CASE("deletion and contraction") {
  // H_3(P5) = {abcd, bcde}
  auto p5 = h3("path:5");
  CHECK(edge_set(p5) == std::set<VertexSet>{make_set({0, 1, 2, 3}), make_set({1, 2, 3, 4})});
  CHECK(edge_set(delete_vertex(p5, 4)) == std::set<VertexSet>{make_set({0, 1, 2, 3})});

  auto c8 = h3("cycle:8");
  auto d = delete_vertex(c8, 0);
  CHECK(d.num_vertices() == 7);
  CHECK(d.num_edges() == 4);
  for (std::size_t v = 0; v < 7; ++v) CHECK(d.labels()[v].original == v + 1);
  CHECK(delete_vertex(Clutter(3), 1).is_empty());

  auto path = minimalize({make_set({0, 1}), make_set({1, 2})}, 3);
  CHECK(edge_set(contract_vertex(path, 1)) == std::set<VertexSet>{make_set({0}), make_set({1})});
  auto single = minimalize({make_set({0, 1})}, 2);
  CHECK(contract_vertex(contract_vertex(single, 0), 0).is_unit());
  // contract c in {abcd, bcde}: {abd, bde} on vertices a,b,d,e
  auto pc = contract_vertex(p5, 2);
  CHECK(edge_set(pc) == std::set<VertexSet>{make_set({0, 1, 2}), make_set({1, 2, 3})});
}

TEST_CASE("minor enumeration") {
  auto two = minimalize({make_set({0, 1})}, 2);
  auto all = minors(two);
  CHECK(all.size() == 9);
  CHECK(all.front().clutter == two);
  auto c8 = h3("cycle:8");
  CHECK(minor(c8, singleton(0), 0) == delete_vertex(c8, 0));

  // Operation order does not matter.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    auto c = random_clutter(rng, n, 6);
    for (const auto& m : minors(c)) {
      Clutter step = c;
      std::vector<std::pair<std::size_t, bool>> ops;
      for (auto v : members(m.deleted)) ops.emplace_back(v, true);
      for (auto v : members(m.contracted)) ops.emplace_back(v, false);
      std::shuffle(ops.begin(), ops.end(), rng);
      for (auto [v, del] : ops) {
        // Locate v among the surviving vertices by its label.
        std::size_t pos = 0;
        while (step.labels()[pos].original != v) ++pos;
        step = del ? delete_vertex(step, pos) : contract_vertex(step, pos);
      }
      CHECK(step == m.clutter);
    }
  }
}

TEST_CASE("duplication") {
  auto p5 = h3("path:5");
  auto same = duplicate(p5, MultiplicityVector::constant(5, 1));
  CHECK(edge_set(same) == edge_set(p5));

  auto e = minimalize({make_set({0, 1})}, 2);
  auto d = duplicate(e, {{2, 1}});
  CHECK(d.num_vertices() == 3);
  CHECK(edge_set(d) == std::set<VertexSet>{make_set({0, 2}), make_set({1, 2})});
  CHECK(d.vertex_name(0) == "x1");
  CHECK(d.vertex_name(1) == "x1.1");

  auto pruned = duplicate(p5, {{0, 1, 1, 1, 1}});
  CHECK(pruned.num_edges() == 1);
  CHECK(edge_set(pruned) == std::set<VertexSet>{make_set({0, 1, 2, 3})});

  // Duplicating twice equals duplicating by the products.
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_clutter(rng, 4, 4);
    auto a = random_cost(rng, 4, 2);
    auto once = duplicate(c, a);
    auto b = random_cost(rng, once.num_vertices(), 2);
    auto twice = duplicate(once, b);
    MultiplicityVector ab = MultiplicityVector::constant(4, 0);
    for (std::size_t v = 0; v < once.num_vertices(); ++v) ab.values[once.labels()[v].original] += b[v];
    // Equal copy counts per original vertex make the two clutters isomorphic;
    // compare the multiset of edge label profiles.
    auto profile = [](const Clutter& x) {
      std::multiset<std::vector<std::size_t>> out;
      for (auto e : x.edges()) {
        std::vector<std::size_t> orig;
        for (auto v : members(e)) orig.push_back(x.labels()[v].original);
        std::sort(orig.begin(), orig.end());
        out.insert(orig);
      }
      return out;
    };
    auto direct = duplicate(c, ab);
    CHECK(twice.num_vertices() == direct.num_vertices());
    CHECK(profile(twice) == profile(direct));
  }
}

TEST_CASE("tau, nu, covers on fixtures") {
  auto c8 = h3("cycle:8");
  CHECK(tau(c8) == 2);
  CHECK(nu(c8) == 2);
  CHECK(has_konig(c8));
  auto c5 = h3("cycle:5");
  CHECK(tau(c5) == 2);
  CHECK(nu(c5) == 1);
  CHECK_FALSE(has_konig(c5));
  CHECK(tau(Clutter(4)) == 0);
  CHECK(nu(Clutter(4)) == 0);
  CHECK(has_konig(Clutter(4)));

  CHECK(minimal_covers(c8).size() == 12);
  auto single = minimalize({make_set({0, 1, 2, 3})}, 4);
  CHECK(minimal_covers(single) == std::vector<VertexSet>{1, 2, 4, 8});
  auto c5_covers = minimal_covers(c5);
  CHECK(c5_covers.size() == 10);
  for (auto s : c5_covers) CHECK(cardinality(s) == 2);

  CHECK(weighted_cover_min(c8, MultiplicityVector::constant(8, 1)) == 2);
  CHECK(weighted_cover_min(c8, MultiplicityVector::constant(8, 0)) == 0);
  CHECK(weighted_cover_min(c5, {{1, 1, 1, 2, 2}}) == 2);
  CHECK(max_integer_packing(c8, MultiplicityVector::constant(8, 1)) == 2);
  CHECK(max_integer_packing(c8, MultiplicityVector::constant(8, 0)) == 0);
  CHECK(max_integer_packing(c5, MultiplicityVector::constant(5, 1)) == 1);

  CHECK_THROWS(tau(Clutter::unit(2)));
  CHECK_THROWS(nu(Clutter::unit(2)));
  CHECK_THROWS(minimal_covers(Clutter::unit(2)));
}

TEST_CASE("solvers agree with exhaustive oracles") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 9;
    auto c = random_clutter(rng, n, 10);
    auto edges = oracle::edge_list(c);
    CHECK(tau(c) == oracle::tau(edges, n));
    CHECK(nu(c) == oracle::nu(edges));
    auto cover = minimum_cover(c);
    CHECK(oracle::covers(cover, edges));
    auto matching = maximum_matching(c);
    VertexSet used = 0;
    for (auto e : matching) {
      CHECK((used & e) == 0);
      used |= e;
    }
    auto covers = minimal_covers(c);
    auto expected = oracle::minimal_covers(edges, n);
    CHECK(std::set<VertexSet>(covers.begin(), covers.end()) == std::set<VertexSet>(expected.begin(), expected.end()));
    CHECK(covers.size() == expected.size());
    if (n <= 6) {
      auto cost = random_cost(rng, n, 3);
      CHECK(weighted_cover_min(c, cost) == oracle::weighted_cover(edges, cost.values));
      CHECK(max_integer_packing(c, cost) == oracle::integer_packing(edges, cost.values));
      // Both sides equal the duplicated-clutter parameters.
      auto d = duplicate(c, cost);
      if (!d.is_unit()) {
        CHECK(nu(d) == max_integer_packing(c, cost));
        CHECK(tau(d) == weighted_cover_min(c, cost));
      }
    }
  }
}

TEST_CASE("packing property") {
  CHECK_FALSE(has_packing(h3("cycle:5")));
  auto p5 = check_packing(h3("path:5"));
  CHECK(p5.holds);
  CHECK(p5.minors_checked > 0);
  CHECK(has_packing(minimalize({make_set({0, 1, 2})}, 3)));
  auto r = check_packing(h3("cycle:5"));
  REQUIRE(r.witness);
  CHECK(r.witness->deleted == 0);
  CHECK(r.witness->contracted == 0);
  CHECK_THROWS_AS(check_packing(h3("cycle:12"), 10), ResourceLimitError);

  // No Konig on the trivial minor means no packing.
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_clutter(rng, 2 + trial % 4, 5);
    if (!has_konig(c)) CHECK_FALSE(has_packing(c));
  }
}

TEST_CASE("bounded mfmc probe") {
  auto c5 = mengerian_bounded(h3("cycle:5"), 1);
  CHECK(c5.refuted);
  REQUIRE(c5.cost);
  CHECK(c5.cover_value > c5.packing_value);
  auto c8 = mengerian_bounded(h3("cycle:8"), 1);
  CHECK_FALSE(c8.refuted);
  CHECK(c8.costs_checked == 256);
  CHECK_FALSE(mengerian_bounded(Clutter(3), 2).refuted);
  CHECK_THROWS(mengerian_bounded(h3("cycle:5"), 0));
}

TEST_CASE("weak duality on random pairs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + trial % 7;
    auto c = random_clutter(rng, n, 8);
    auto cost = random_cost(rng, n, 3);
    CHECK(nu(c) <= tau(c));
    CHECK(max_integer_packing(c, cost) <= weighted_cover_min(c, cost));
  }
}

TEST_CASE("clutter text format") {
  auto c8 = h3("cycle:8");
  CHECK(parse_clutter_text(to_text(c8)) == c8);
  CHECK(parse_clutter_text("n 3\nunit\n").is_unit());
  CHECK(parse_clutter_text("n 3\n").is_empty());
  CHECK_THROWS_AS(parse_clutter_text("n 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_clutter_text("1 2\n"), ParseError);
}
