#include "mengerian/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

// Deliberately self-contained: nothing here calls the solvers, the polyhedron
// code or the ideal arithmetic that produce the certificates.

namespace mengerian {

using nlohmann::json;

namespace {

using Set = std::vector<int>;  // sorted 0-based vertex list

struct Instance {
  int n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<Set> edges;  // H_t, sorted lexicographically
};

Instance rebuild(const json& doc) {
  Instance in;
  const auto& g = doc.at("graph");
  in.n = g.at("n").get<int>();
  int t = doc.at("t").get<int>();
  in.adj.assign(in.n, std::vector<bool>(in.n, false));
  for (const auto& e : g.at("edges")) {
    int u = e.at(0).get<int>() - 1, v = e.at(1).get<int>() - 1;
    if (u < 0 || v < 0 || u >= in.n || v >= in.n || u == v) throw std::runtime_error("bad graph edge in report");
    in.adj[u][v] = in.adj[v][u] = true;
  }
  // Every (t+1)-subset, every ordering of it: is it a path?
  Set pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == t + 1) {
      Set order = pick;
      do {
        bool path = true;
        for (int i = 0; i + 1 < static_cast<int>(order.size()) && path; ++i) path = in.adj[order[i]][order[i + 1]];
        if (path) {
          in.edges.push_back(pick);
          return;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (int v = from; v < in.n; ++v) {
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
    }
  };
  if (t >= 1 && t + 1 <= in.n) choose(0);
  std::sort(in.edges.begin(), in.edges.end());
  return in;
}

Set to_set(const json& list, int n) {
  Set s;
  for (const auto& x : list) {
    int v = x.get<int>() - 1;
    if (v < 0 || v >= n) throw std::runtime_error("vertex out of range in certificate");
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool meets(const Set& a, const Set& b) {
  return std::any_of(a.begin(), a.end(), [&](int v) { return std::binary_search(b.begin(), b.end(), v); });
}

std::vector<Set> minimal_only(std::vector<Set> sets) {
  std::sort(sets.begin(), sets.end(), [](const Set& a, const Set& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Set> out;
  for (const auto& s : sets) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Set& o) { return std::includes(s.begin(), s.end(), o.begin(), o.end()); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Rank over Q by plain Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

mpq_class rational_det(std::vector<std::vector<mpq_class>> m) {
  mpq_class d = 1;
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

mpq_class read_rational(const json& j) {
  mpq_class q(j.get<std::string>(), 10);
  q.canonicalize();
  return q;
}

// tau and nu by exhaustive subset scans.
std::size_t scan_tau(const std::vector<Set>& edges, int n) {
  std::size_t best = static_cast<std::size_t>(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool cover = std::all_of(edges.begin(), edges.end(), [&](const Set& e) {
      return std::any_of(e.begin(), e.end(), [&](int v) { return (mask >> v) & 1U; });
    });
    if (cover) best = size;
  }
  return best;
}

std::size_t scan_nu(const std::vector<Set>& edges) {
  std::size_t best = 0;
  std::vector<const Set*> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Set* c) { return meets(*c, edges[i]); })) continue;
      chosen.push_back(&edges[i]);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

std::vector<Set> scan_minimal_covers(const std::vector<Set>& edges, int n) {
  std::vector<Set> covers;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool cover = std::all_of(edges.begin(), edges.end(), [&](const Set& e) {
      return std::any_of(e.begin(), e.end(), [&](int v) { return (mask >> v) & 1U; });
    });
    if (!cover) continue;
    Set s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.push_back(v);
    covers.push_back(s);
  }
  return minimal_only(covers);
}

class Checker {
 public:
  explicit Checker(VerificationResult& out) : out_(out) {}

  void check(const json& doc, const std::string& where) {
    if (!doc.contains("checks")) return;
    Instance in = rebuild(doc);
    if (doc.contains("hypergraph")) {
      const auto& h = doc.at("hypergraph");
      if (h.contains("m") && h.at("m").get<std::size_t>() != in.edges.size() && doc.value("complete", true)) {
        record(false, where + " hypergraph: reported m = " + h.at("m").dump() + ", rebuilt " + std::to_string(in.edges.size()));
      }
    }
    const auto& checks = doc.at("checks");
    if (checks.contains("tu") && checks["tu"].contains("witness")) tu(in, checks["tu"]["witness"], where);
    if (checks.contains("ideal") && checks["ideal"].contains("fractional_vertex"))
      fractional(in, checks["ideal"]["fractional_vertex"], where);
    if (checks.contains("packing") && checks["packing"].contains("witness")) packing(in, checks["packing"]["witness"], where);
    if (checks.contains("ntf") && checks["ntf"].contains("witness")) ntf(in, checks["ntf"]["witness"], where);
    if (checks.contains("mfmc") && checks["mfmc"].contains("witness")) mfmc(in, checks["mfmc"]["witness"], where);
  }

 private:
  void record(bool ok, const std::string& message) {
    ++out_.certificates_checked;
    out_.valid = out_.valid && ok;
    out_.messages.push_back((ok ? "ok   " : "FAIL ") + message);
  }

  void tu(const Instance& in, const json& w, const std::string& where) {
    const auto& rows = w.at("rows");
    const auto& cols = w.at("cols");
    if (rows.size() != cols.size() || rows.empty()) return record(false, where + " tu: witness is not square");
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : rows) {
      auto i = r.get<std::size_t>();
      if (i < 1 || i > in.edges.size()) return record(false, where + " tu: row index out of range");
      std::vector<mpq_class> row;
      for (const auto& c : cols) {
        int v = c.get<int>() - 1;
        if (v < 0 || v >= in.n) return record(false, where + " tu: column index out of range");
        row.emplace_back(std::binary_search(in.edges[i - 1].begin(), in.edges[i - 1].end(), v) ? 1 : 0);
      }
      m.push_back(std::move(row));
    }
    auto d = rational_det(m);
    bool ok = d == read_rational(w.at("det")) && d != 0 && d != 1 && d != -1;
    record(ok, where + " tu: " + std::to_string(rows.size()) + "x" + std::to_string(rows.size()) +
                   " submatrix has determinant " + d.get_str());
  }

  void fractional(const Instance& in, const json& v, const std::string& where) {
    const auto& coords = v.at("coordinates");
    if (static_cast<int>(coords.size()) != in.n) return record(false, where + " ideal: vertex has wrong dimension");
    std::vector<mpq_class> x;
    for (const auto& c : coords) x.push_back(read_rational(c));
    bool feasible = std::all_of(x.begin(), x.end(), [](const mpq_class& q) { return q >= 0; });
    bool fractional = std::any_of(x.begin(), x.end(), [](const mpq_class& q) { return q.get_den() != 1; });
    std::vector<std::vector<mpq_class>> tight;
    for (const auto& e : in.edges) {
      mpq_class s = 0;
      for (int u : e) s += x[u];
      if (s < 1) feasible = false;
      if (s == 1) {
        std::vector<mpq_class> row(in.n, 0);
        for (int u : e) row[u] = 1;
        tight.push_back(std::move(row));
      }
    }
    for (int j = 0; j < in.n; ++j) {
      if (x[j] != 0) continue;
      std::vector<mpq_class> row(in.n, 0);
      row[j] = 1;
      tight.push_back(std::move(row));
    }
    auto r = rational_rank(tight);
    record(feasible && fractional && r == static_cast<std::size_t>(in.n),
           where + " ideal: fractional point feasible=" + (feasible ? "yes" : "no") + ", tight rank " +
               std::to_string(r) + " of " + std::to_string(in.n));
  }

  void packing(const Instance& in, const json& w, const std::string& where) {
    auto del = to_set(w.at("deleted"), in.n);
    auto con = to_set(w.at("contracted"), in.n);
    if (meets(del, con)) return record(false, where + " packing: deleted and contracted sets overlap");
    std::vector<int> keep;
    for (int v = 0; v < in.n; ++v)
      if (!std::binary_search(del.begin(), del.end(), v) && !std::binary_search(con.begin(), con.end(), v))
        keep.push_back(v);
    std::vector<Set> edges;
    for (const auto& e : in.edges) {
      if (meets(e, del)) continue;
      Set rest;
      for (int v : e)
        if (!std::binary_search(con.begin(), con.end(), v))
          rest.push_back(static_cast<int>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin()));
      edges.push_back(rest);
    }
    edges = minimal_only(edges);
    if (!edges.empty() && edges.front().empty()) return record(false, where + " packing: minor is the unit clutter");
    auto t = scan_tau(edges, static_cast<int>(keep.size()));
    auto v = scan_nu(edges);
    record(t != v, where + " packing: minor has tau " + std::to_string(t) + ", nu " + std::to_string(v));
  }

  void ntf(const Instance& in, const json& w, const std::string& where) {
    auto k = w.at("k").get<std::uint32_t>();
    auto e = w.at("exponents").get<std::vector<std::uint32_t>>();
    if (static_cast<int>(e.size()) != in.n) return record(false, where + " ntf: exponent vector has wrong length");
    bool symbolic = true;
    for (const auto& c : scan_minimal_covers(in.edges, in.n)) {
      std::uint64_t s = 0;
      for (int v : c) s += e[v];
      symbolic = symbolic && s >= k;
    }
    // Is e divisible by a product of k edge monomials?
    std::function<bool(std::size_t, std::uint32_t)> divisible = [&](std::size_t from, std::uint32_t left) {
      if (left == 0) return true;
      for (std::size_t i = from; i < in.edges.size(); ++i) {
        const auto& edge = in.edges[i];
        if (!std::all_of(edge.begin(), edge.end(), [&](int v) { return e[v] > 0; })) continue;
        for (int v : edge) --e[v];
        bool hit = divisible(i, left - 1);
        for (int v : edge) ++e[v];
        if (hit) return true;
      }
      return false;
    };
    bool ordinary = divisible(0, k);
    record(symbolic && !ordinary, where + " ntf: monomial in symbolic power " + std::to_string(k) + ": " +
                                      (symbolic ? "yes" : "no") + ", in ordinary power: " + (ordinary ? "yes" : "no"));
  }

  void mfmc(const Instance& in, const json& w, const std::string& where) {
    auto cost = w.at("cost").get<std::vector<std::uint64_t>>();
    if (static_cast<int>(cost.size()) != in.n) return record(false, where + " mfmc: cost vector has wrong length");
    std::uint64_t cover = UINT64_MAX;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << in.n); ++mask) {
      bool ok = std::all_of(in.edges.begin(), in.edges.end(), [&](const Set& e) {
        return std::any_of(e.begin(), e.end(), [&](int v) { return (mask >> v) & 1U; });
      });
      if (!ok) continue;
      std::uint64_t c = 0;
      for (int v = 0; v < in.n; ++v)
        if ((mask >> v) & 1U) c += cost[v];
      cover = std::min(cover, c);
    }
    std::uint64_t pack = 0;
    std::function<void(std::size_t, std::uint64_t)> fill = [&](std::size_t i, std::uint64_t value) {
      pack = std::max(pack, value);
      if (i == in.edges.size()) return;
      const auto& e = in.edges[i];
      std::uint64_t room = UINT64_MAX;
      for (int v : e) room = std::min(room, cost[v]);
      for (std::uint64_t take = 0; take <= room; ++take) {
        for (int v : e) cost[v] -= take;
        fill(i + 1, value + take);
        for (int v : e) cost[v] += take;
      }
    };
    fill(0, 0);
    bool ok = cover > pack && cover == w.at("cover_value").get<std::uint64_t>() &&
              pack == w.at("packing_value").get<std::uint64_t>();
    record(ok, where + " mfmc: min cover " + std::to_string(cover) + ", max packing " + std::to_string(pack));
  }

  VerificationResult& out_;
};

}  // namespace

VerificationResult verify_certificates(const json& document) {
  VerificationResult result;
  Checker checker(result);
  if (!document.is_object() || !document.contains("schema")) throw std::runtime_error("not a report document (no schema field)");
  if (document.at("schema").get<int>() != 1) throw std::runtime_error("unsupported schema version " + document.at("schema").dump());
  if (document.contains("entries")) {
    for (const auto& e : document.at("entries")) checker.check(e, e.value("canonical", std::string("?")));
  } else {
    checker.check(document, document.value("kind", std::string("report")));
  }
  return result;
}

}  // namespace mengerian
