#include "mengerian/exact_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mengerian/detail/bareiss.hpp"
#include "mengerian/errors.hpp"

namespace mengerian {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!valid_int(text.substr(0, slash)) ||
      (slash != std::string_view::npos && !valid_int(text.substr(slash + 1)))) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Rational q;
  q.set_str(std::string(text[0] == '+' ? text.substr(1) : text), 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  ExactMatrix s(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) s(i, j) = (*this)(row_ids[i], col_ids[j]);
  return s;
}

std::vector<std::int64_t> ExactMatrix::to_int64() const {
  std::vector<std::int64_t> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) {
    const auto& q = data_[i];
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      throw std::invalid_argument("entry " + to_string(q) + " is not a small integer");
    }
    out[i] = q.get_num().get_si();
  }
  return out;
}

Rational det(const ExactMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  std::size_t n = m.rows();
  // Scale every row to integers, take the integer determinant, undo the scale.
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Rational d(detail::bareiss_det(a, n), scale);
  d.canonicalize();
  return d;
}

namespace {

// Row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return eliminate(rows, m.cols()).size();
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  std::size_t n = m.cols();
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n] = b[i];
  }
  auto pivots = eliminate(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  if (pivots.size() < n) throw std::domain_error("solve: system is underdetermined (column rank < n)");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = rows[i][n] / rows[i][pivots[i]];
  return x;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UnimodularityResult is_totally_unimodular(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j);
      if (q != 0 && q != 1 && q != -1) {
        throw std::invalid_argument("is_totally_unimodular: entry " + to_string(q) + " is not in {0, +1, -1}");
      }
    }
  }
  const auto a = m.to_int64();
  const std::size_t rows = m.rows(), cols = m.cols();
  // Row supports, used to skip submatrices with an all-zero row or column.
  std::vector<std::uint64_t> row_mask(rows, 0);
  if (cols <= 64) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (a[i * cols + j] != 0) row_mask[i] |= std::uint64_t{1} << j;
  }

  UnimodularityResult result;
  std::vector<std::int64_t> sub;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::size_t> r(k), c(k);
    std::iota(r.begin(), r.end(), 0);
    do {
      std::iota(c.begin(), c.end(), 0);
      do {
        if (cols <= 64) {
          std::uint64_t cm = 0;
          for (auto j : c) cm |= std::uint64_t{1} << j;
          std::uint64_t reach = 0;
          bool zero_row = false;
          for (auto i : r) {
            auto hit = row_mask[i] & cm;
            zero_row |= hit == 0;
            reach |= hit;
          }
          if (zero_row || reach != cm) continue;
        }
        ++result.submatrices_checked;
        sub.resize(k * k);
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = 0; y < k; ++y) sub[x * k + y] = a[r[x] * cols + c[y]];
        std::int64_t d = 0;
        try {
          d = detail::bareiss_det(sub, k);
        } catch (const detail::Int64Overflow&) {
          // Cannot be in {0, +-1} if it overflowed, but report the exact value.
          auto s = m.submatrix(r, c);
          result.totally_unimodular = false;
          result.witness = SubmatrixWitness{r, c, det(s)};
          return result;
        }
        if (d < -1 || d > 1) {
          result.totally_unimodular = false;
          result.witness = SubmatrixWitness{r, c, Rational(d)};
          return result;
        }
      } while (next_combination(c, cols));
    } while (next_combination(r, rows));
  }
  return result;
}

}  // namespace mengerian
