#include "mengerian/covering_polyhedron.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mengerian/detail/bareiss.hpp"
#include "mengerian/errors.hpp"

namespace mengerian {

bool PolyhedronVertex::integral() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::size_t PolyhedronVertex::tight_rows(std::size_t m) const {
  return static_cast<std::size_t>(std::count_if(tight.begin(), tight.end(), [m](std::size_t i) { return i < m; }));
}

namespace {

std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
mpz_class abs_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}
Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Constraints satisfied with equality by a ray, one bit per constraint.
class ZeroSet {
 public:
  explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const ZeroSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

template <class Int>
struct Ray {
  std::vector<Int> v;  // x_0..x_{n-1}, then the homogenizing coordinate
  ZeroSet zeros;
};

template <class Int>
void normalize(std::vector<Int>& v) {
  Int g(0);
  for (const auto& x : v) g = abs_gcd(g, x);
  if (g > 1)
    for (auto& x : v) x = detail::exact_div(x, g);
}

// Double description on the cone {(x, t) : x >= 0, t >= 0, Ax - t1 >= 0},
// whose extreme rays with t > 0 are the vertices of Q(A) scaled by 1/t.
// Starts from the orthant and cuts with one row at a time; a new ray is made
// from each adjacent pair on opposite sides, adjacency tested combinatorially.
template <class Int>
std::vector<std::vector<Rational>> double_description(const std::vector<VertexSet>& rows, std::size_t n,
                                                      std::uint64_t max_rays) {
  const std::size_t d = n + 1;
  const std::size_t m = rows.size();
  const std::size_t bits = m + d;  // rows, then x_j >= 0, then t >= 0
  std::vector<Ray<Int>> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Ray<Int> r{std::vector<Int>(d, Int(0)), ZeroSet(bits)};
    r.v[j] = Int(1);
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) r.zeros.set(m + k);
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray<Int>> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      Int s = -rays[k].v[n];
      for (VertexSet e = rows[i]; e != 0; e &= e - 1) s += rays[k].v[lowest(e)];
      value[k] = s;
      if (s > 0) {
        pos.push_back(k);
      } else if (s < 0) {
        neg.push_back(k);
      } else {
        rays[k].zeros.set(i);
      }
    }
    if (neg.empty()) continue;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (value[k] >= 0) next.push_back(rays[k]);
    for (auto p : pos) {
      for (auto q : neg) {
        ZeroSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && common.subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray<Int> r{std::vector<Int>(d), common};
        for (std::size_t j = 0; j < d; ++j) r.v[j] = detail::mul_sub(value[p], rays[q].v[j], value[q], rays[p].v[j]);
        normalize(r.v);
        r.zeros.set(i);
        next.push_back(std::move(r));
      }
    }
    if (next.size() > max_rays) {
      throw ResourceLimitError("vertex enumeration: more than " + std::to_string(max_rays) + " extreme rays");
    }
    rays = std::move(next);
  }

  std::vector<std::vector<Rational>> out;
  for (const auto& r : rays) {
    if (r.v[n] == 0) continue;
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = make_rational(r.v[j], r.v[n]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<VertexSet> zero_one_rows(const ExactMatrix& a) {
  std::vector<VertexSet> rows(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 1) {
        rows[i] |= singleton(j);
      } else if (a(i, j) != 0) {
        throw std::invalid_argument("covering polyhedron: matrix must be 0/1, found " + to_string(a(i, j)));
      }
    }
  }
  return rows;
}

std::vector<std::size_t> tight_constraints(const std::vector<VertexSet>& rows, std::span<const Rational> x) {
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational total = 0;
    for (VertexSet s = rows[i]; s != 0; s &= s - 1) total += x[lowest(s)];
    if (total == 1) tight.push_back(i);
  }
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] == 0) tight.push_back(rows.size() + j);
  return tight;
}

// First n linearly independent constraints among `tight`, in index order.
std::vector<std::size_t> greedy_basis(const std::vector<VertexSet>& rows, std::size_t n,
                                      const std::vector<std::size_t>& tight) {
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivots, basis;
  for (auto c : tight) {
    if (basis.size() == n) break;
    std::vector<Rational> v(n, 0);
    if (c < rows.size()) {
      for (auto j : members(rows[c])) v[j] = 1;
    } else {
      v[c - rows.size()] = 1;
    }
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rational f = v[pivots[r]] / echelon[r][pivots[r]];
      for (std::size_t j = 0; j < n; ++j) v[j] -= f * echelon[r][j];
    }
    auto p = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (p == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(p - v.begin()));
    echelon.push_back(std::move(v));
    basis.push_back(c);
  }
  return basis;
}

}  // namespace

std::vector<PolyhedronVertex> covering_polyhedron_vertices(const ExactMatrix& a, const VertexEnumerationLimits& limits) {
  const std::size_t n = a.cols();
  if (n > limits.max_columns) {
    throw ResourceLimitError("vertex enumeration: " + std::to_string(n) + " columns exceeds cap " +
                             std::to_string(limits.max_columns));
  }
  auto rows = zero_one_rows(a);
  std::vector<std::vector<Rational>> points;
  try {
    points = double_description<std::int64_t>(rows, n, limits.max_rays);
  } catch (const detail::Int64Overflow&) {
    points = double_description<mpz_class>(rows, n, limits.max_rays);
  }
  std::sort(points.begin(), points.end());

  std::vector<PolyhedronVertex> out;
  out.reserve(points.size());
  for (auto& x : points) {
    PolyhedronVertex v;
    v.tight = tight_constraints(rows, x);
    v.basis = greedy_basis(rows, n, v.tight);
    if (v.basis.size() != n) throw std::logic_error("vertex enumeration: extreme ray without a full-rank tight set");
    v.coordinates = std::move(x);
    out.push_back(std::move(v));
  }
  return out;
}

PointCheck check_point(const ExactMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("check_point: point has wrong dimension");
  const std::size_t m = a.rows(), n = a.cols();
  PointCheck r;
  r.feasible = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] < 0) r.feasible = false;
    if (x[j] == 0) r.tight.push_back(m + j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) total += a(i, j) * x[j];
    if (total < 1) r.feasible = false;
    if (total == 1) r.tight.push_back(i);
  }
  std::sort(r.tight.begin(), r.tight.end());
  ExactMatrix t(r.tight.size(), n);
  for (std::size_t k = 0; k < r.tight.size(); ++k) {
    auto c = r.tight[k];
    if (c < m) {
      for (std::size_t j = 0; j < n; ++j) t(k, j) = a(c, j);
    } else {
      t(k, c - m) = 1;
    }
  }
  r.tight_rank = rank(t);
  r.is_vertex = r.feasible && r.tight_rank == n;
  return r;
}

IdealResult is_ideal(const Clutter& c, const VertexEnumerationLimits& limits) {
  if (c.is_unit()) throw std::invalid_argument("is_ideal: undefined for the unit clutter");
  IdealResult result;
  if (c.is_empty()) {
    result.vertex_count = 1;
    return result;
  }
  auto vertices = covering_polyhedron_vertices(incidence_matrix(c), limits);
  result.vertex_count = vertices.size();
  const std::size_t m = c.num_edges();
  for (auto& v : vertices) {
    if (v.integral()) continue;
    ++result.fractional_count;
    result.ideal = false;
    // Vertices arrive in increasing coordinate order, so ">=" keeps the
    // lexicographically largest among equally tight ones.
    if (!result.fractional_vertex || v.tight_rows(m) >= result.fractional_vertex->tight_rows(m)) {
      result.fractional_vertex = std::move(v);
    }
  }
  return result;
}

}  // namespace mengerian
