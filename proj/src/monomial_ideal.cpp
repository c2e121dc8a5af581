#include "mengerian/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mengerian {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomials live in different polynomial rings");
}

}  // namespace

Monomial Monomial::from_support(VertexSet s, std::size_t num_vars, std::uint32_t exponent) {
  Monomial m(num_vars);
  for (; s != 0; s &= s - 1) {
    auto v = lowest(s);
    if (v >= num_vars) throw std::invalid_argument("from_support: variable out of range");
    m.exps_[v] = exponent;
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s |= singleton(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ring(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ring(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("quotient: " + other.to_string() + " does not divide " + to_string());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

bool graded_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                      a.exponents().end());
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), graded_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(std::move(g));
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : n_(num_vars) {
  for (const auto& g : gens)
    if (g.num_vars() != num_vars) throw std::invalid_argument("generator has the wrong number of variables");
  gens_ = minimal_generators(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal edge_ideal(const Clutter& c) {
  std::size_t n = c.num_vertices();
  if (c.is_unit()) return MonomialIdeal(n, {Monomial(n)});
  std::vector<Monomial> gens;
  for (auto e : c.edges()) gens.push_back(Monomial::from_support(e, n));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("product: ideals live in different rings");
  std::vector<Monomial> gens;
  gens.reserve(a.mu() * b.mu());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t k) {
  MonomialIdeal r(ideal.num_vars(), {Monomial(ideal.num_vars())});
  for (std::uint32_t i = 0; i < k; ++i) r = product(r, ideal);
  return r;
}

MonomialIdeal prime_power(VertexSet cover, std::uint32_t k, std::size_t num_vars) {
  if (cover == 0) throw std::invalid_argument("prime_power: empty cover");
  auto vars = members(cover);
  for (auto v : vars)
    if (v >= num_vars) throw std::invalid_argument("prime_power: variable out of range");
  std::vector<Monomial> gens;
  Monomial m(num_vars);
  // Every way of spreading k over the variables of the cover.
  auto spread = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == vars.size()) {
      m[vars[i]] = left;
      gens.push_back(m);
      m[vars[i]] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[vars[i]] = e;
      self(self, i + 1, left - e);
    }
    m[vars[i]] = 0;
  };
  spread(spread, 0, k);
  return MonomialIdeal(num_vars, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("intersect: ideals live in different rings");
  std::vector<Monomial> gens;
  gens.reserve(a.mu() * b.mu());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x.lcm(y));
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

}  // namespace mengerian
