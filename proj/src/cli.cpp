#include "mengerian/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mengerian/classify.hpp"
#include "mengerian/errors.hpp"
#include "mengerian/graph.hpp"
#include "mengerian/report_json.hpp"
#include "mengerian/survey.hpp"
#include "mengerian/verify.hpp"

namespace mengerian::cli {

using nlohmann::json;

namespace {

constexpr const char* kFamilyHelp =
    "Graph families (--family name:p1,p2,...):\n"
    "  path:k            k vertices 1-2-...-k\n"
    "  cycle:k           k-cycle\n"
    "  star:k            center 1 with k leaves\n"
    "  double_star:p,q   adjacent centers 1,2 with p and q leaves\n"
    "  spider:l1,l2,...  center 1 with legs of the given lengths\n"
    "  star_plus_edge:k  star:k plus an edge between leaves 2 and 3\n"
    "  complete:k        K_k\n"
    "Inline edge lists use 1-based labels: --edges \"1 2;2 3;3 1\".";

std::string read_all(std::istream& is) { return {std::istreambuf_iterator<char>(is), {}}; }

Graph load_graph(const RunConfig& c) {
  switch (c.input) {
    case InputKind::family: return parse_family_spec(c.input_value);
    case InputKind::edges: return parse_edge_list(c.input_value);
    case InputKind::graph6: return parse_graph6(c.input_value);
    case InputKind::file: {
      std::ifstream f(c.input_value);
      if (!f) throw std::runtime_error("cannot open " + c.input_value);
      return parse_edge_list(read_all(f));
    }
    case InputKind::none: break;
  }
  throw std::invalid_argument("exactly one of --family, --edges, --file, --graph6 is required");
}

Graph load_checked(const RunConfig& c) {
  Graph g = load_graph(c);
  if (g.num_vertices() > c.max_n) {
    throw ResourceLimitError("graph has " + std::to_string(g.num_vertices()) + " vertices; --max-n is " +
                             std::to_string(c.max_n));
  }
  return g;
}

json hypergraph_summary(const Clutter& h, bool full) {
  json j = {{"n", h.num_vertices()}, {"m", h.num_edges()},
            {"uniformity", h.uniformity() ? json(*h.uniformity()) : json(nullptr)}};
  if (full) j["edges"] = clutter_json(h)["edges"];
  return j;
}

std::vector<std::string> vertex_annotations(const std::optional<IdealResult>& ideal) {
  std::vector<std::string> notes;
  if (ideal && ideal->fractional_vertex) {
    for (const auto& q : ideal->fractional_vertex->coordinates) notes.push_back(to_string(q));
  }
  return notes;
}

std::string join_coordinates(const PolyhedronVertex& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coordinates.size(); ++i) s += (i ? "," : "") + to_string(v.coordinates[i]);
  return s + ")";
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : edge_members_1based(s)) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

void decision_text(const DecisionReport& r, std::ostream& out) {
  out << "graph: n=" << r.graph.num_vertices() << " edges=" << r.graph.num_edges() << " graph6=" << to_graph6(r.graph)
      << '\n';
  out << "H_" << r.t << ": m=" << r.hypergraph.num_edges() << '\n';
  if (!r.complete) {
    out << "INCOMPLETE: " << r.incomplete_reason << '\n';
  } else {
    if (!r.hypergraph.is_empty()) {
      out << "tu: " << (r.tu.totally_unimodular ? "yes" : "no");
      if (r.tu.witness) out << " (submatrix det " << to_string(r.tu.witness->det) << ")";
      out << "\nkonig: tau=" << r.konig.tau << " nu=" << r.konig.nu << '\n';
    }
    if (r.ideal) {
      out << "ideal: " << (r.ideal->ideal ? "yes" : "no");
      if (r.ideal->fractional_vertex) out << " (fractional vertex " << join_coordinates(*r.ideal->fractional_vertex) << ")";
      out << '\n';
    }
    if (r.ntf) {
      out << "ntf: " << (r.ntf->normally_torsion_free ? "yes" : "no") << " (checked k=2.." << r.ntf->bound << ")";
      if (r.ntf->witness) out << " witness " << r.ntf->witness->witness->to_string() << " at k=" << r.ntf->witness->k;
      out << '\n';
    }
    if (r.packing) out << "packing: " << (r.packing->holds ? "yes" : "no") << '\n';
    out << "trace: " << to_string(*r.trace) << "\nmengerian: " << (*r.mengerian ? "yes" : "no") << '\n';
  }
  if (r.classifier) {
    out << "classifier: " << to_string(r.classifier->clause) << '\n';
    if (r.agreement) out << "agreement: " << (*r.agreement ? "yes" : "no") << '\n';
  }
}

DecisionLimits limits_from(const RunConfig& c) {
  DecisionLimits l;
  l.max_vertices = c.max_n;
  l.max_power = c.max_k;
  l.packing_max_n = c.max_minor_n;
  return l;
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (c.format == a) return;
  throw std::invalid_argument("--format " + c.format + " is not available for " + c.command);
}

int cmd_hypergraph(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text", "csv", "dot"});
  Graph g = load_checked(c);
  Clutter h = build_path_hypergraph(g, c.t);
  if (c.format == "text") {
    out << to_text(h);
  } else if (c.format == "csv") {
    out << "edge";
    for (std::size_t v = 0; v < h.num_vertices(); ++v) out << ",x" << v + 1;
    out << '\n';
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      out << i + 1;
      for (std::size_t v = 0; v < h.num_vertices(); ++v) out << ',' << (contains(h.edges()[i], v) ? 1 : 0);
      out << '\n';
    }
  } else if (c.format == "dot") {
    out << to_dot(g);
  } else {
    out << json{{"schema", kSchemaVersion}, {"kind", "hypergraph"}, {"graph", graph_json(g)}, {"t", c.t},
                {"hypergraph", clutter_json(h)}}
               .dump(2)
        << '\n';
  }
  return 0;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text", "dot"});
  Graph g = load_checked(c);
  Clutter h = build_path_hypergraph(g, c.t);
  json checks = json::object();
  bool holds = true;
  std::string summary;
  std::optional<IdealResult> ideal;
  if (c.property == "tu") {
    auto r = is_totally_unimodular(incidence_matrix(h));
    holds = r.totally_unimodular;
    checks["tu"] = unimodularity_json(r);
    if (r.witness) summary = "submatrix det " + to_string(r.witness->det);
  } else if (c.property == "ideal") {
    ideal = is_ideal(h);
    holds = ideal->ideal;
    checks["ideal"] = ideal_json(*ideal, c.certificates);
    if (ideal->fractional_vertex) summary = "fractional vertex " + join_coordinates(*ideal->fractional_vertex);
  } else if (c.property == "konig") {
    KonigResult k;
    if (!h.is_empty()) {
      k.cover = minimum_cover(h);
      k.tau = cardinality(k.cover);
      k.matching = maximum_matching(h);
      k.nu = k.matching.size();
    }
    holds = k.holds();
    checks["konig"] = konig_json(k);
    summary = "tau=" + std::to_string(k.tau) + " nu=" + std::to_string(k.nu);
  } else if (c.property == "packing") {
    auto r = check_packing(h, c.max_minor_n);
    holds = r.holds;
    checks["packing"] = packing_json(r);
    if (r.witness) {
      summary = "minor deleting " + set_text(r.witness->deleted) + " contracting " + set_text(r.witness->contracted);
    }
  } else if (c.property == "ntf") {
    auto r = is_normally_torsion_free(h, c.max_k);
    holds = r.normally_torsion_free;
    checks["ntf"] = ntf_json(r, c.certificates);
    if (r.witness) summary = r.witness->witness->to_string() + " at k=" + std::to_string(r.witness->k);
  } else if (c.property == "mfmc-probe") {
    auto r = h.is_empty() ? MfmcProbe{} : mengerian_bounded(h, c.cmax);
    holds = !r.refuted;
    checks["mfmc"] = mfmc_json(r);
    if (r.cost) {
      summary = "cover " + std::to_string(r.cover_value) + " > packing " + std::to_string(r.packing_value);
    }
  } else {
    throw std::invalid_argument("unknown property '" + c.property + "'");
  }

  if (c.format == "text") {
    out << c.property << ": " << (holds ? "holds" : "fails");
    if (!summary.empty()) out << " (" << summary << ")";
    out << '\n';
  } else if (c.format == "dot") {
    auto notes = vertex_annotations(ideal);
    out << to_dot(g, notes);
  } else {
    out << json{{"schema", kSchemaVersion}, {"kind", "check"},  {"property", c.property},
                {"graph", graph_json(g)},    {"t", c.t},         {"hypergraph", hypergraph_summary(h, c.certificates)},
                {"holds", holds},            {"checks", checks}}
               .dump(2)
        << '\n';
  }
  return c.assert_mode && !holds ? 2 : 0;
}

int cmd_decide(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text", "dot"});
  Graph g = load_checked(c);
  auto r = decide_mengerian_exact(g, c.t, limits_from(c));
  if (c.format == "text") {
    decision_text(r, out);
  } else if (c.format == "dot") {
    auto notes = vertex_annotations(r.ideal);
    out << to_dot(g, notes);
  } else {
    out << to_json(r, c.certificates).dump(2) << '\n';
  }
  return 0;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  Graph g = load_checked(c);
  auto v = classify_mengerian(g);
  if (c.format == "text") {
    out << (v.mengerian ? "mengerian" : "not mengerian") << ": " << to_string(v.clause) << " (" << v.note << ")\n";
  } else {
    out << json{{"schema", kSchemaVersion}, {"kind", "classify"}, {"graph", graph_json(g)}, {"verdict", verdict_json(v)}}
               .dump(2)
        << '\n';
  }
  return 0;
}

int cmd_survey(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text", "csv"});
  SurveyOptions o;
  o.min_n = c.survey_min_n;
  o.max_n = c.survey_max_n;
  o.cap = c.survey_cap;
  if (const char* env = std::getenv("MENGERIAN_MAX_N")) {
    try {
      o.cap = std::stoul(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("MENGERIAN_MAX_N is not a number: ") + env);
    }
  }
  o.t = c.t;
  o.packing_max_n = c.survey_packing_n;
  o.limits = limits_from(c);
  o.threads = c.threads;
  auto r = cross_check(o);
  if (c.format == "csv") {
    out << to_csv(r);
  } else if (c.format == "text") {
    out << "graphs: " << r.counters.total << "\nmengerian: " << r.counters.mengerian << "\nempty: " << r.counters.empty
        << "\ntu: " << r.counters.tu << "\nnon_ideal: " << r.counters.non_ideal
        << "\npower_equality: " << r.counters.power_equality << "\nincomplete: " << r.counters.incomplete
        << "\nmismatches: " << r.mismatches.size() << "\nconjecture_violations: " << r.conjecture_violations.size()
        << "\ndichotomy_exceptions: " << r.dichotomy_exceptions.size() << '\n';
    for (const auto& [n, k] : r.per_n) out << "n=" << n << ": " << k.total << " graphs, " << k.mengerian << " mengerian\n";
  } else {
    out << to_json(r, c.certificates).dump(2) << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::istream& in, std::ostream& out) {
  std::string text;
  if (c.certificate_path == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(c.certificate_path);
    if (!f) throw std::runtime_error("cannot open " + c.certificate_path);
    text = read_all(f);
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate file is not JSON: ") + e.what());
  }
  auto r = verify_certificates(doc);
  for (const auto& m : r.messages) out << m << '\n';
  out << (r.valid ? "valid" : "INVALID") << ": " << r.certificates_checked << " certificate(s) checked\n";
  return r.valid ? 0 : 2;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.t < 1) throw std::invalid_argument("--t must be at least 1");
    if (config.max_n == 0 || config.max_k == 0 || config.max_minor_n == 0 || config.cmax == 0) {
      throw std::invalid_argument("caps must be positive");
    }
    if (config.command == "hypergraph") return cmd_hypergraph(config, out);
    if (config.command == "check") return cmd_check(config, out);
    if (config.command == "decide") return cmd_decide(config, out);
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "survey") return cmd_survey(config, out);
    if (config.command == "verify-certificate") return cmd_verify(config, in, out);
    throw std::invalid_argument("unknown command '" + config.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Mengerian path-hypergraph toolkit", "mengerian"};
  app.footer(kFamilyHelp);
  app.require_subcommand(1);

  std::string family, edges, file, graph6;
  auto add_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("--family", family, "named graph family, e.g. cycle:8");
    auto* e = sub->add_option("--edges", edges, "inline edge list, e.g. \"1 2;2 3\"");
    auto* p = sub->add_option("--file", file, "edge-list file")->check(CLI::ExistingFile);
    auto* g = sub->add_option("--graph6", graph6, "graph6 string");
    f->excludes(e, p, g);
    e->excludes(p, g);
    p->excludes(g);
    sub->add_option("--t", c.t, "path length t of H_t")->capture_default_str();
    sub->add_option("--max-n", c.max_n, "largest input graph accepted")->capture_default_str();
    sub->add_option("--max-k", c.max_k, "highest power tried by the NTF check")->capture_default_str();
    sub->add_option("--max-minor-n", c.max_minor_n, "packing check vertex cap")->capture_default_str();
    sub->add_option("--format", c.format, "json, text, csv or dot")
        ->check(CLI::IsMember({"json", "text", "csv", "dot"}))
        ->capture_default_str();
    sub->add_flag("--certificates", c.certificates, "include full witnesses");
  };

  auto* hyper = app.add_subcommand("hypergraph", "emit the edges of H_t");
  add_input(hyper);
  auto* check = app.add_subcommand("check", "test a single property and print its certificate");
  add_input(check);
  check->add_option("property", c.property, "tu, ideal, konig, packing, ntf or mfmc-probe")
      ->required()
      ->check(CLI::IsMember({"tu", "ideal", "konig", "packing", "ntf", "mfmc-probe"}));
  check->add_flag("--assert", c.assert_mode, "exit 2 when the property fails");
  check->add_option("--cmax", c.cmax, "mfmc-probe: largest vertex cost")->capture_default_str();
  auto* decide = app.add_subcommand("decide", "full Mengerian decision report");
  add_input(decide);
  auto* classify = app.add_subcommand("classify", "graph-class verdict");
  add_input(classify);
  auto* survey = app.add_subcommand("survey", "cross-check all connected graphs in a range of sizes");
  survey->add_option("--min-n", c.survey_min_n, "smallest graph size")->capture_default_str();
  survey->add_option("--max-n", c.survey_max_n, "largest graph size (MENGERIAN_MAX_N overrides the cap)")
      ->capture_default_str();
  survey->add_option("--t", c.t, "path length t of H_t")->capture_default_str();
  survey->add_option("--packing-max-n", c.survey_packing_n, "packing check vertex cap")->capture_default_str();
  survey->add_option("--max-k", c.max_k, "highest power tried by the NTF check")->capture_default_str();
  survey->add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
  survey->add_option("--format", c.format, "json, text or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  bool csv = false;
  survey->add_flag("--csv", csv, "same as --format csv");
  survey->add_flag("--certificates", c.certificates, "include full witnesses");
  auto* verify = app.add_subcommand("verify-certificate", "re-check the certificates in a JSON report");
  verify->add_option("report", c.certificate_path, "report file, or - for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  auto* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  if (csv) c.format = "csv";
  for (auto [kind, value] : {std::pair{InputKind::family, &family}, std::pair{InputKind::edges, &edges},
                             std::pair{InputKind::file, &file}, std::pair{InputKind::graph6, &graph6}}) {
    if (!value->empty()) {
      c.input = kind;
      c.input_value = *value;
    }
  }
  return run(c, in, out, err);
}

}  // namespace mengerian::cli
