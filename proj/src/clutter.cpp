#include "mengerian/clutter.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mengerian/errors.hpp"

namespace mengerian {

namespace {

std::vector<VertexLabel> identity_labels(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("clutter has " + std::to_string(n) + " vertices; at most " +
                                std::to_string(kMaxVertices) + " supported");
  }
  std::vector<VertexLabel> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = {i, 0};
  return labels;
}

// Squeezes the members of `s` that lie in `keep` down to consecutive indices.
VertexSet compress(VertexSet s, VertexSet keep) {
  VertexSet out = 0;
  std::size_t pos = 0;
  for (VertexSet k = keep; k != 0; k &= k - 1, ++pos) {
    if (contains(s, lowest(k))) out |= singleton(pos);
  }
  return out;
}

Clutter restrict_to(const Clutter& c, const std::vector<VertexSet>& edges, VertexSet keep, bool unit) {
  std::vector<VertexLabel> labels;
  for (VertexSet k = keep; k != 0; k &= k - 1) labels.push_back(c.labels()[lowest(k)]);
  if (unit) return minimalize({0}, std::move(labels));
  std::vector<VertexSet> squeezed;
  squeezed.reserve(edges.size());
  for (auto e : edges) squeezed.push_back(compress(e, keep));
  return minimalize(std::move(squeezed), std::move(labels));
}

void require_vertex(const Clutter& c, std::size_t v) {
  if (v >= c.num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n = " +
                                std::to_string(c.num_vertices()));
  }
}

}  // namespace

Clutter::Clutter(std::size_t n) : labels_(identity_labels(n)) {}

Clutter Clutter::unit(std::size_t n) {
  Clutter c(n);
  c.unit_ = true;
  return c;
}

std::optional<std::size_t> Clutter::uniformity() const {
  if (unit_ || edges_.empty()) return std::nullopt;
  auto d = cardinality(edges_.front());
  for (auto e : edges_)
    if (cardinality(e) != d) return std::nullopt;
  return d;
}

VertexSet Clutter::support() const {
  VertexSet s = 0;
  for (auto e : edges_) s |= e;
  return s;
}

std::string Clutter::vertex_name(std::size_t v) const {
  const auto& l = labels_.at(v);
  std::string name = "x" + std::to_string(l.original + 1);
  if (l.copy > 0) name += "." + std::to_string(l.copy);
  return name;
}

Clutter minimalize(std::vector<VertexSet> edges, std::size_t n) {
  return minimalize(std::move(edges), identity_labels(n));
}

Clutter minimalize(std::vector<VertexSet> edges, std::vector<VertexLabel> labels) {
  Clutter c;
  c.labels_ = std::move(labels);
  VertexSet universe = full_set(c.labels_.size());
  for (auto e : edges) {
    if (!is_subset(e, universe)) throw std::invalid_argument("edge references a vertex outside the clutter");
    if (e == 0) {
      c.unit_ = true;
      return c;
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](VertexSet a, VertexSet b) { return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : a < b; });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto e : edges) {
    bool dominated = std::any_of(c.edges_.begin(), c.edges_.end(), [e](VertexSet f) { return is_subset(f, e); });
    if (!dominated) c.edges_.push_back(e);
  }
  std::sort(c.edges_.begin(), c.edges_.end(), lex_less);
  return c;
}

ExactMatrix incidence_matrix(const Clutter& c) {
  if (c.is_unit()) throw std::invalid_argument("incidence_matrix: unit clutter has no incidence matrix");
  ExactMatrix a(c.num_edges(), c.num_vertices());
  for (std::size_t i = 0; i < c.num_edges(); ++i) {
    for (VertexSet s = c.edges()[i]; s != 0; s &= s - 1) a(i, lowest(s)) = 1;
  }
  return a;
}

Clutter minor(const Clutter& c, VertexSet deleted, VertexSet contracted) {
  VertexSet universe = full_set(c.num_vertices());
  if ((deleted & contracted) != 0) throw std::invalid_argument("minor: deleted and contracted sets overlap");
  if (!is_subset(deleted | contracted, universe)) throw std::invalid_argument("minor: vertex out of range");
  VertexSet keep = universe & ~(deleted | contracted);
  if (c.is_unit()) return restrict_to(c, {}, keep, true);
  std::vector<VertexSet> edges;
  bool unit = false;
  for (auto e : c.edges()) {
    if (e & deleted) continue;
    auto rest = e & ~contracted;
    if (rest == 0) unit = true;
    edges.push_back(rest);
  }
  return restrict_to(c, edges, keep, unit);
}

Clutter delete_vertex(const Clutter& c, std::size_t v) {
  require_vertex(c, v);
  return minor(c, singleton(v), 0);
}

Clutter contract_vertex(const Clutter& c, std::size_t v) {
  require_vertex(c, v);
  return minor(c, 0, singleton(v));
}

std::vector<Minor> minors(const Clutter& c) {
  std::size_t n = c.num_vertices();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<Minor> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    VertexSet d = 0, k = 0;
    auto x = code;
    for (std::size_t v = 0; v < n; ++v, x /= 3) {
      if (x % 3 == 1) d |= singleton(v);
      if (x % 3 == 2) k |= singleton(v);
    }
    out.push_back({d, k, minor(c, d, k)});
  }
  return out;
}

MultiplicityVector MultiplicityVector::constant(std::size_t n, std::uint64_t value) {
  return {std::vector<std::uint64_t>(n, value)};
}

Clutter duplicate(const Clutter& c, const MultiplicityVector& a) {
  std::size_t n = c.num_vertices();
  if (a.size() != n) throw std::invalid_argument("duplicate: multiplicity vector has wrong length");
  std::vector<std::size_t> first(n, 0);
  std::vector<VertexLabel> labels;
  for (std::size_t v = 0; v < n; ++v) {
    first[v] = labels.size();
    for (std::uint64_t j = 0; j < a[v]; ++j) {
      if (labels.size() == kMaxVertices) throw std::invalid_argument("duplicate: more than 64 vertices");
      labels.push_back({c.labels()[v].original, c.labels()[v].copy * a[v] + j});
    }
  }
  if (c.is_unit()) return minimalize({0}, std::move(labels));
  std::vector<VertexSet> edges;
  for (auto e : c.edges()) {
    auto verts = members(e);
    if (std::any_of(verts.begin(), verts.end(), [&](std::size_t v) { return a[v] == 0; })) continue;
    // Odometer over one copy choice per vertex of e.
    std::vector<std::uint64_t> pick(verts.size(), 0);
    while (true) {
      VertexSet s = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) s |= singleton(first[verts[i]] + pick[i]);
      edges.push_back(s);
      std::size_t i = 0;
      while (i < verts.size() && ++pick[i] == a[verts[i]]) pick[i++] = 0;
      if (i == verts.size()) break;
    }
  }
  return minimalize(std::move(edges), std::move(labels));
}

std::vector<std::size_t> edge_members_1based(VertexSet e) {
  auto m = members(e);
  for (auto& v : m) ++v;
  return m;
}

std::string to_text(const Clutter& c) {
  std::ostringstream os;
  os << "n " << c.num_vertices() << '\n';
  if (c.is_unit()) {
    os << "unit\n";
    return os.str();
  }
  for (auto e : c.edges()) {
    bool first = true;
    for (auto v : edge_members_1based(e)) {
      os << (first ? "" : " ") << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Clutter parse_clutter_text(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<VertexSet> edges;
  bool unit = false;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    std::string tok;
    std::vector<std::string> toks;
    while (is >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!n) {
      if (toks.size() != 2 || toks[0] != "n") throw ParseError("clutter text must start with 'n <count>'");
      std::size_t count = 0;
      auto [p, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), count);
      if (ec != std::errc() || p != toks[1].data() + toks[1].size() || count > kMaxVertices) {
        throw ParseError("clutter text: bad vertex count '" + toks[1] + "'");
      }
      n = count;
      continue;
    }
    if (toks.size() == 1 && toks[0] == "unit") {
      unit = true;
      continue;
    }
    VertexSet e = 0;
    for (const auto& t : toks) {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || p != t.data() + t.size() || v < 1 || v > *n) {
        throw ParseError("clutter text line " + std::to_string(line_no) + ": bad vertex '" + t + "'");
      }
      e |= singleton(v - 1);
    }
    edges.push_back(e);
  }
  if (!n) throw ParseError("clutter text: missing 'n <count>' header");
  if (unit) return Clutter::unit(*n);
  return minimalize(std::move(edges), *n);
}

}  // namespace mengerian
