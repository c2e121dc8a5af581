#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "mengerian/errors.hpp"
#include "mengerian/monomial_ideal.hpp"

namespace mengerian {

namespace {

void require_proper(const Clutter& c, const char* what) {
  if (c.is_unit() || c.is_empty()) {
    throw std::invalid_argument(std::string(what) + ": needs a clutter with at least one nonempty edge");
  }
}

}  // namespace

MonomialIdeal symbolic_power(const Clutter& c, std::uint32_t k) {
  require_proper(c, "symbolic_power");
  const std::size_t n = c.num_vertices();
  auto covers = minimal_covers(c);
  MonomialIdeal result(n, {Monomial(n)});
  for (auto cover : covers) result = intersect(result, prime_power(cover, k, n));
  return result;
}

bool in_symbolic_power(const Monomial& m, std::span<const VertexSet> minimal_covers, std::uint32_t k) {
  for (auto cover : minimal_covers) {
    std::uint64_t total = 0;
    for (VertexSet s = cover; s != 0; s &= s - 1) total += m[lowest(s)];
    if (total < k) return false;
  }
  return true;
}

MonomialIdeal symbolic_power_by_degree_sum(const Clutter& c, std::uint32_t k, std::uint64_t max_candidates) {
  require_proper(c, "symbolic_power_by_degree_sum");
  const std::size_t n = c.num_vertices();
  auto covers = minimal_covers(c);
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (box > max_candidates / (k + 1)) {
      throw ResourceLimitError("degree-sum scan: box {0.." + std::to_string(k) + "}^" + std::to_string(n) +
                               " exceeds " + std::to_string(max_candidates) + " candidates");
    }
    box *= k + 1;
  }
  std::vector<Monomial> gens;
  Monomial m(n);
  for (std::uint64_t code = 0; code < box; ++code) {
    auto x = code;
    for (std::size_t i = 0; i < n; ++i, x /= k + 1) m[i] = static_cast<std::uint32_t>(x % (k + 1));
    if (!in_symbolic_power(m, covers, k)) continue;
    bool generator = true;
    for (std::size_t i = 0; i < n && generator; ++i) {
      if (m[i] == 0) continue;
      --m[i];
      generator = !in_symbolic_power(m, covers, k);
      ++m[i];
    }
    if (generator) gens.push_back(m);
  }
  return MonomialIdeal(n, std::move(gens));
}

namespace {

class PowerMembership {
 public:
  explicit PowerMembership(const MonomialIdeal& ideal) : gens_(ideal.generators()) {}

  bool test(const Monomial& rem, std::uint32_t k) {
    if (k == 0) return true;
    // A product of k generators has degree at least k times the smallest one.
    if (gens_.empty() || rem.degree() < k * gens_.front().degree()) return false;
    auto key = std::make_pair(std::vector<std::uint32_t>(rem.exponents().begin(), rem.exponents().end()), k);
    if (failed_.contains(key)) return false;
    for (const auto& g : gens_) {
      if (g.divides(rem) && test(rem.quotient(g), k - 1)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

 private:
  const std::vector<Monomial>& gens_;
  std::set<std::pair<std::vector<std::uint32_t>, std::uint32_t>> failed_;
};

}  // namespace

bool member_of_power(const Monomial& m, const MonomialIdeal& ideal, std::uint32_t k) {
  if (m.num_vars() != ideal.num_vars()) throw std::invalid_argument("member_of_power: wrong number of variables");
  return PowerMembership(ideal).test(m, k);
}

PowerEquality powers_equal(const Clutter& c, std::uint32_t k) {
  require_proper(c, "powers_equal");
  auto ideal = edge_ideal(c);
  auto sym = symbolic_power(c, k);
  PowerEquality r;
  r.k = k;
  r.symbolic_generators = sym.mu();
  PowerMembership membership(ideal);
  for (const auto& g : sym.generators()) {
    if (!membership.test(g, k)) {
      r.equal = false;
      r.witness = g;
      break;
    }
  }
  return r;
}

TorsionFreeResult is_normally_torsion_free(const Clutter& c, std::uint32_t max_power) {
  if (c.is_unit()) throw std::invalid_argument("is_normally_torsion_free: undefined for the unit clutter");
  TorsionFreeResult r;
  if (c.is_empty()) return r;
  r.bound = static_cast<std::uint32_t>((c.num_edges() + 1) / 2);
  if (r.bound > max_power) {
    throw ResourceLimitError("power check: bound " + std::to_string(r.bound) + " exceeds cap " +
                             std::to_string(max_power));
  }
  for (std::uint32_t k = 2; k <= r.bound; ++k) {
    auto pe = powers_equal(c, k);
    r.transcript.push_back(pe);
    if (!pe.equal) {
      r.normally_torsion_free = false;
      r.witness = std::move(pe);
      break;
    }
  }
  return r;
}

}  // namespace mengerian
