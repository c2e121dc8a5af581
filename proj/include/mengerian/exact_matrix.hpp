#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mengerian {

/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Dense row-major matrix of rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix submatrix(std::span<const std::size_t> row_ids,
                        std::span<const std::size_t> col_ids) const;

  /// Entry-wise small-integer view; throws if an entry is not an integer that
  /// fits in int64.
  std::vector<std::int64_t> to_int64() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument when M is
/// not square.
Rational det(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Unique solution of Mx = b. Returns nullopt for an inconsistent system and
/// throws std::domain_error when the system is consistent but underdetermined.
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, std::span<const Rational> b);

struct SubmatrixWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational det;
};

struct UnimodularityResult {
  bool totally_unimodular = true;
  std::optional<SubmatrixWitness> witness;
  std::uint64_t submatrices_checked = 0;
};

/// Exhaustive scan of square submatrices by increasing size; stops at the
/// first determinant outside {0, +1, -1}. Entries must be 0 or +-1.
UnimodularityResult is_totally_unimodular(const ExactMatrix& m);

}  // namespace mengerian
