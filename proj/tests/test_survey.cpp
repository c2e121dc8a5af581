#include "doctest.h"
#include "mengerian/report_json.hpp"
#include "mengerian/survey.hpp"
#include "oracles.hpp"

using namespace mengerian;

TEST_CASE("connected graph enumeration") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expected[n]);

  for (std::size_t n = 1; n <= 5; ++n) {
    auto got = enumerate_connected(n);
    auto reference = oracle::connected_classes(n);
    REQUIRE(got.size() == reference.size());
    for (const auto& r : reference)
      CHECK(std::count_if(got.begin(), got.end(), [&](const Graph& g) { return oracle::isomorphic(g, r); }) == 1);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(canonical_form(got[i - 1]) < canonical_form(got[i]));
    for (const auto& g : got) CHECK(is_connected(g));
  }
  CHECK_THROWS(enumerate_connected(8));
  CHECK_THROWS(enumerate_connected(0));
}

TEST_CASE("survey on five vertices") {
  SurveyOptions o;
  o.min_n = 5;
  o.max_n = 5;
  auto r = cross_check(o);
  CHECK(r.entries.size() == 21);
  CHECK(r.mismatches.empty());
  CHECK(r.incomplete.empty());
  CHECK(r.verified());
  CHECK(r.counters.mengerian == 4);
  CHECK(r.counters.total == 21);
  CHECK(r.counters.empty + r.counters.tu + r.counters.non_ideal + r.counters.power_equality == r.counters.total);

  // The Mengerian classes are P5, the star, spider(2,1,1) and the star plus an edge.
  std::set<std::string> mengerian;
  for (const auto& e : r.entries)
    if (*e.report.mengerian) mengerian.insert(e.canonical);
  std::set<std::string> expected;
  for (const char* f : {"path:5", "star:4", "spider:2,1,1", "star_plus_edge:4"}) expected.insert(canonical_form(parse_family_spec(f)));
  CHECK(mengerian == expected);
}

TEST_CASE("survey up to six vertices") {
  SurveyOptions o;
  o.min_n = 4;
  o.max_n = 6;
  auto r = cross_check(o);
  CHECK(r.entries.size() == 139);
  CHECK(r.mismatches.empty());
  CHECK(r.conjecture_violations.empty());
  CHECK(r.dichotomy_exceptions.empty());
  CHECK(r.verified());
  std::size_t total = 0;
  for (const auto& [n, c] : r.per_n) total += c.total;
  CHECK(total == r.counters.total);
  CHECK(r.per_n.at(6).total == 112);
}

TEST_CASE("t = 4 has no dichotomy exception on small graphs") {
  SurveyOptions o;
  o.min_n = 4;
  o.max_n = 5;
  o.t = 4;
  auto r = cross_check(o);
  CHECK(r.dichotomy_exceptions.empty());
  CHECK(r.incomplete.empty());
  for (const auto& e : r.entries) CHECK_FALSE(e.report.classifier);
}

TEST_CASE("dichotomy exception is C8") {
  std::vector<Graph> graphs{parse_family_spec("cycle:8"), parse_family_spec("cycle:7"), parse_family_spec("path:8")};
  SurveyOptions o;
  o.packing_max_n = 0;
  auto r = cross_check_graphs(graphs, o);
  REQUIRE(r.dichotomy_exceptions.size() == 1);
  CHECK(r.entries[r.dichotomy_exceptions[0]].canonical == canonical_form(parse_family_spec("cycle:8")));
}

TEST_CASE("survey output is deterministic") {
  SurveyOptions o;
  o.min_n = 4;
  o.max_n = 5;
  o.threads = 4;
  auto a = cross_check(o);
  o.threads = 1;
  auto b = cross_check(o);
  CHECK(to_json(a, true).dump() == to_json(b, true).dump());
  CHECK(to_csv(a) == to_csv(b));
}
