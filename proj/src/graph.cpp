#include "mengerian/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mengerian/errors.hpp"

namespace mengerian {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("graph has " + std::to_string(n) + " vertices; at most " +
                                std::to_string(kMaxVertices) + " supported");
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_long(std::string_view tok, std::size_t line_no) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(tok) +
                     "' is not an integer");
  }
  return v;
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n, 0) { check_size(n); }

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += cardinality(a);
  return twice / 2;
}

bool Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} out of range for n = " + std::to_string(adj_.size()));
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (VertexSet s = adj_[u] & ~full_set(u + 1); s != 0; s &= s - 1) out.emplace_back(u, lowest(s));
  }
  return out;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != adj_.size()) throw std::invalid_argument("permutation size mismatch");
  Graph out(adj_.size());
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<long, long>> pairs;
  std::vector<std::size_t> pair_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      long n = parse_long(toks[1], line_no);
      if (n < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive");
      declared = static_cast<std::size_t>(n);
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex labels, got '" +
                       std::string(line) + "'");
    }
    long u = parse_long(toks[0], line_no), v = parse_long(toks[1], line_no);
    if (u < 1 || v < 1) throw ParseError("line " + std::to_string(line_no) + ": labels are 1-based");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    pairs.emplace_back(u, v);
    pair_lines.push_back(line_no);
  }
  std::size_t n = declared.value_or(0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto hi = static_cast<std::size_t>(std::max(pairs[i].first, pairs[i].second));
    if (declared && hi > *declared) {
      throw ParseError("line " + std::to_string(pair_lines[i]) + ": label " + std::to_string(hi) +
                       " exceeds declared n = " + std::to_string(*declared));
    }
    n = std::max(n, hi);
  }
  if (n == 0) throw ParseError("edge list defines no vertices");
  if (n > kMaxVertices) throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices");
  Graph g(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (!g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) && warnings) {
      warnings->push_back("line " + std::to_string(pair_lines[i]) + ": duplicate edge " +
                          std::to_string(u) + " " + std::to_string(v) + " ignored");
    }
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (unsigned char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: invalid byte " + std::to_string(ch));
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw ParseError("graph6: 8-byte size form not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated size field");
    n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
        static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds supported size");
  std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated bit vector");
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing bytes after bit vector");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph make_family(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + std::string(name) + "' takes " + std::to_string(count) +
                                  " parameter(s), got " + std::to_string(params.size()));
    }
  };
  auto at_least = [&](int value, int lo, const char* what) {
    if (value < lo) {
      throw std::invalid_argument(std::string(name) + ": " + what + " must be >= " + std::to_string(lo));
    }
    return static_cast<std::size_t>(value);
  };

  if (name == "path") {
    need(1);
    auto k = at_least(params[0], 1, "vertex count");
    Graph g(k);
    for (std::size_t i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "cycle") {
    need(1);
    auto k = at_least(params[0], 3, "length");
    Graph g(k);
    for (std::size_t i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
  }
  if (name == "star") {
    need(1);
    auto k = at_least(params[0], 1, "leaf count");
    Graph g(k + 1);
    for (std::size_t i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
  }
  if (name == "double_star") {
    need(2);
    auto p = at_least(params[0], 0, "leaf count");
    auto q = at_least(params[1], 0, "leaf count");
    Graph g(2 + p + q);
    g.add_edge(0, 1);
    for (std::size_t i = 0; i < p; ++i) g.add_edge(0, 2 + i);
    for (std::size_t i = 0; i < q; ++i) g.add_edge(1, 2 + p + i);
    return g;
  }
  if (name == "spider") {
    if (params.empty()) throw std::invalid_argument("spider needs at least one leg");
    std::size_t n = 1;
    for (int len : params) n += at_least(len, 1, "leg length");
    Graph g(n);
    std::size_t next = 1;
    for (int len : params) {
      std::size_t prev = 0;
      for (int i = 0; i < len; ++i, ++next) {
        g.add_edge(prev, next);
        prev = next;
      }
    }
    return g;
  }
  if (name == "star_plus_edge") {
    need(1);
    auto k = at_least(params[0], 2, "leaf count");
    Graph g(k + 1);
    for (std::size_t i = 1; i <= k; ++i) g.add_edge(0, i);
    g.add_edge(1, 2);
    return g;
  }
  if (name == "complete") {
    need(1);
    auto k = at_least(params[0], 1, "vertex count");
    Graph g(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Graph parse_family_spec(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    auto rest = spec.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      if (comma == std::string_view::npos) comma = rest.size();
      auto tok = rest.substr(start, comma - start);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
        throw ParseError("family spec '" + std::string(spec) + "': bad parameter '" + std::string(tok) + "'");
      }
      params.push_back(v);
      start = comma + 1;
    }
  }
  return make_family(name, params);
}

bool is_connected(const Graph& g) {
  std::size_t n = g.num_vertices();
  if (n == 0) return false;
  VertexSet seen = singleton(0), frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest(s));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_set(n);
}

std::string to_dot(const Graph& g, std::span<const std::string> annotations) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    os << "  x" << v + 1 << " [label=\"x" << v + 1;
    if (v < annotations.size() && !annotations[v].empty()) os << "\\n" << annotations[v];
    os << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  x" << u + 1 << " -- x" << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mengerian
