#include "mengerian/report_json.hpp"

#include <sstream>

namespace mengerian {

using nlohmann::json;

namespace {

json vertex_list(VertexSet s) { return edge_members_1based(s); }

json vertex_lists(std::span<const VertexSet> sets) {
  json out = json::array();
  for (auto s : sets) out.push_back(vertex_list(s));
  return out;
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

json monomial_json(const Monomial& m) {
  return {{"monomial", m.to_string()}, {"exponents", m.exponents()}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.num_vertices()}, {"edges", edges}, {"graph6", to_graph6(g)}, {"connected", is_connected(g)}};
}

json clutter_json(const Clutter& c) {
  json j = {{"n", c.num_vertices()}, {"unit", c.is_unit()}, {"m", c.num_edges()},
            {"uniformity", optional_json(c.uniformity())}, {"edges", vertex_lists(c.edges())}};
  bool duplicated = false;
  for (const auto& l : c.labels()) duplicated |= l.copy != 0 || l.original >= c.num_vertices();
  if (duplicated) {
    json names = json::array();
    for (std::size_t v = 0; v < c.num_vertices(); ++v) names.push_back(c.vertex_name(v));
    j["vertex_names"] = names;
  }
  return j;
}

json vertex_json(const PolyhedronVertex& v, bool full) {
  json coords = json::array();
  for (const auto& q : v.coordinates) coords.push_back(to_string(q));
  json j = {{"coordinates", coords}, {"integral", v.integral()}};
  if (full) {
    j["tight_constraints"] = v.tight;
    j["basis"] = v.basis;
  }
  return j;
}

json unimodularity_json(const UnimodularityResult& r) {
  json j = {{"totally_unimodular", r.totally_unimodular}, {"submatrices_checked", r.submatrices_checked}};
  if (r.witness) {
    j["witness"] = {{"rows", one_based(r.witness->rows)},
                    {"cols", one_based(r.witness->cols)},
                    {"det", to_string(r.witness->det)}};
  }
  return j;
}

json ideal_json(const IdealResult& r, bool full) {
  json j = {{"ideal", r.ideal}, {"vertex_count", r.vertex_count}, {"fractional_count", r.fractional_count}};
  if (r.fractional_vertex) j["fractional_vertex"] = vertex_json(*r.fractional_vertex, full);
  return j;
}

json packing_json(const PackingResult& r) {
  json j = {{"holds", r.holds}, {"minors_checked", r.minors_checked}};
  if (r.witness) {
    j["witness"] = {{"deleted", vertex_list(r.witness->deleted)},
                    {"contracted", vertex_list(r.witness->contracted)},
                    {"tau", tau(r.witness->clutter)},
                    {"nu", nu(r.witness->clutter)},
                    {"minor", clutter_json(r.witness->clutter)}};
  }
  return j;
}

json konig_json(const KonigResult& r) {
  return {{"tau", r.tau}, {"nu", r.nu}, {"holds", r.holds()}, {"cover", vertex_list(r.cover)},
          {"matching", vertex_lists(r.matching)}};
}

json ntf_json(const TorsionFreeResult& r, bool full) {
  json j = {{"normally_torsion_free", r.normally_torsion_free}, {"bound", r.bound}};
  if (r.witness) {
    j["witness"] = monomial_json(*r.witness->witness);
    j["witness"]["k"] = r.witness->k;
  }
  if (full) {
    json steps = json::array();
    for (const auto& p : r.transcript) {
      steps.push_back({{"k", p.k}, {"equal", p.equal}, {"symbolic_generators", p.symbolic_generators}});
    }
    j["transcript"] = steps;
  }
  return j;
}

json mfmc_json(const MfmcProbe& r) {
  json j = {{"refuted", r.refuted}, {"costs_checked", r.costs_checked}};
  if (r.cost) {
    j["witness"] = {{"cost", r.cost->values}, {"cover_value", r.cover_value}, {"packing_value", r.packing_value}};
  }
  return j;
}

json verdict_json(const ClassVerdict& v) {
  return {{"mengerian", v.mengerian}, {"clause", to_string(v.clause)}, {"note", v.note}};
}

json to_json(const DecisionReport& r, bool full) {
  json hyper = {{"n", r.hypergraph.num_vertices()},
                {"m", r.hypergraph.num_edges()},
                {"uniformity", optional_json(r.hypergraph.uniformity())}};
  if (full) hyper["edges"] = vertex_lists(r.hypergraph.edges());

  json checks = json::object();
  if (r.complete && !r.hypergraph.is_empty()) {
    checks["tu"] = unimodularity_json(r.tu);
    checks["konig"] = konig_json(r.konig);
  }
  if (r.ideal) checks["ideal"] = ideal_json(*r.ideal, full);
  if (r.packing) checks["packing"] = packing_json(*r.packing);
  if (r.ntf) checks["ntf"] = ntf_json(*r.ntf, full);

  json j = {{"schema", kSchemaVersion},
            {"kind", "decision"},
            {"graph", graph_json(r.graph)},
            {"t", r.t},
            {"hypergraph", hyper},
            {"checks", checks},
            {"trace", r.trace ? json(to_string(*r.trace)) : json(nullptr)},
            {"mengerian", optional_json(r.mengerian)},
            {"classifier", r.classifier ? verdict_json(*r.classifier) : json(nullptr)},
            {"agreement", optional_json(r.agreement)},
            {"complete", r.complete}};
  if (!r.complete) j["incomplete_reason"] = r.incomplete_reason;
  return j;
}

namespace {

json counters_json(const SurveyCounters& c) {
  return {{"total", c.total}, {"mengerian", c.mengerian}, {"empty", c.empty}, {"tu", c.tu},
          {"non_ideal", c.non_ideal}, {"power_equality", c.power_equality}, {"incomplete", c.incomplete}};
}

json labels(const SurveyReport& r, const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (auto i : ids) out.push_back(r.entries[i].canonical);
  return out;
}

}  // namespace

json to_json(const SurveyReport& r, bool full) {
  json per_n = json::object();
  for (const auto& [n, c] : r.per_n) per_n[std::to_string(n)] = counters_json(c);
  json entries = json::array();
  for (const auto& e : r.entries) {
    json d = to_json(e.report, full);
    d.erase("schema");
    d["canonical"] = e.canonical;
    entries.push_back(std::move(d));
  }
  return {{"schema", kSchemaVersion},
          {"kind", "survey"},
          {"options",
           {{"min_n", r.options.min_n}, {"max_n", r.options.max_n}, {"t", r.options.t},
            {"packing_max_n", r.options.packing_max_n}}},
          {"counters", counters_json(r.counters)},
          {"per_n", per_n},
          {"mismatches", labels(r, r.mismatches)},
          {"conjecture_violations", labels(r, r.conjecture_violations)},
          {"dichotomy_exceptions", labels(r, r.dichotomy_exceptions)},
          {"incomplete", labels(r, r.incomplete)},
          {"verified", r.verified()},
          {"entries", entries}};
}

std::string to_csv(const SurveyReport& r) {
  std::ostringstream os;
  os << "n,canonical,graph6,clause,trace,mengerian,classifier,agreement,tu,ideal,packing,complete\n";
  auto flag = [](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "true" : "false") : "";
  };
  for (const auto& e : r.entries) {
    const auto& d = e.report;
    os << d.graph.num_vertices() << ',' << e.canonical << ',' << to_graph6(d.graph) << ','
       << (d.classifier ? std::string(to_string(d.classifier->clause)) : "") << ','
       << (d.trace ? std::string(to_string(*d.trace)) : "INCOMPLETE") << ',' << flag(d.mengerian) << ','
       << flag(d.classifier ? std::optional<bool>(d.classifier->mengerian) : std::nullopt) << ','
       << flag(d.agreement) << ','
       << flag(d.complete && !d.hypergraph.is_empty() ? std::optional<bool>(d.tu.totally_unimodular) : std::nullopt)
       << ',' << flag(d.ideal ? std::optional<bool>(d.ideal->ideal) : std::nullopt) << ','
       << flag(d.packing ? std::optional<bool>(d.packing->holds) : std::nullopt) << ','
       << (d.complete ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace mengerian
