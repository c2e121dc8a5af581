#pragma once

// Fraction-free Gaussian elimination on integer matrices, shared by the
// general big-integer routines and the int64 hot paths (TU scan, vertex
// enumeration). Every division in Bareiss' scheme is exact; the kernels check
// that and throw std::logic_error if it ever fails.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mengerian::detail {

/// Thrown by the int64 kernels when an intermediate leaves the int64 range.
struct Int64Overflow : std::overflow_error {
  Int64Overflow() : std::overflow_error("int64 overflow in fraction-free elimination") {}
};

inline std::int64_t mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t x, y, r;
  if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) || __builtin_sub_overflow(x, y, &r)) {
    throw Int64Overflow();
  }
  return r;
}

inline mpz_class mul_sub(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  return a * b - c * d;
}

inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a % b != 0) throw std::logic_error("Bareiss step produced a non-integral quotient");
  return a / b;
}

inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error("Bareiss step produced a non-integral quotient");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Determinant of the n x n row-major matrix `a` (destroyed).
template <class Int>
Int bareiss_det(std::vector<Int>& a, std::size_t n) {
  if (n == 0) return Int(1);
  Int prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      negate = !negate;
    }
    const Int pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = exact_div(mul_sub(a[i * n + j], pivot, a[i * n + k], a[k * n + j]), prev);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Int d = a[n * n - 1];
  return negate ? Int(-d) : d;
}

/// Solves B x = rhs for square B given row-major as n x n. On success returns
/// integer numerators X and a positive common denominator D with x = X / D
/// (D = |det B|). Returns nullopt when B is singular.
template <class Int>
std::optional<std::pair<std::vector<Int>, Int>> bareiss_solve(std::vector<Int> b, std::vector<Int> rhs,
                                                              std::size_t n) {
  const std::size_t w = n + 1;
  std::vector<Int> m(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * w + j] = b[i * n + j];
    m[i * w + n] = rhs[i];
  }
  Int prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k * w + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * w + k] == 0) ++p;
      if (p == n) return std::nullopt;
      for (std::size_t j = 0; j < w; ++j) std::swap(m[k * w + j], m[p * w + j]);
    }
    const Int pivot = m[k * w + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        m[i * w + j] = exact_div(mul_sub(m[i * w + j], pivot, m[i * w + k], m[k * w + j]), prev);
      }
      m[i * w + k] = 0;
    }
    prev = pivot;
  }
  // Last pivot is +-det(B). Back substitution in the scaled unknowns X = D x,
  // which are integers by Cramer's rule, so each division is exact.
  Int d = m[(n - 1) * w + (n - 1)];
  std::vector<Int> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Int acc = mul_sub(d, m[i * w + n], Int(0), Int(0));
    for (std::size_t j = i + 1; j < n; ++j) acc = mul_sub(acc, Int(1), m[i * w + j], x[j]);
    x[i] = exact_div(acc, m[i * w + i]);
  }
  if (d < 0) {
    d = -d;
    for (auto& v : x) v = -v;
  }
  return std::make_pair(std::move(x), d);
}

}  // namespace mengerian::detail
