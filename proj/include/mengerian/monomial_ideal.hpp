#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mengerian/clutter.hpp"
#include "mengerian/vertex_set.hpp"

namespace mengerian {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

  static Monomial from_support(VertexSet s, std::size_t num_vars, std::uint32_t exponent = 1);

  std::size_t num_vars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool square_free() const;
  VertexSet support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / other; other must divide this.
  Monomial quotient(const Monomial& other) const;

  /// "x1*x3^2"; "1" for the constant monomial.
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Degree first, then the exponent vector in descending lexicographic order,
/// so x1x2x3x4 precedes x2x3x4x5.
bool graded_less(const Monomial& a, const Monomial& b);

/// Monomial ideal held by its unique minimal generating set, sorted by
/// graded_less. No generators means the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t num_vars) : n_(num_vars) {}
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens);

  std::size_t num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t mu() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Minimal elements under divisibility, sorted by graded_less.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

MonomialIdeal edge_ideal(const Clutter& c);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t k);
/// (x_i : i in cover)^k.
MonomialIdeal prime_power(VertexSet cover, std::uint32_t k, std::size_t num_vars);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// k-th symbolic power of the edge ideal: the intersection of P_C^k over all
/// minimal covers C, folded smallest cover first.
MonomialIdeal symbolic_power(const Clutter& c, std::uint32_t k);

/// Same ideal computed from the membership rule "sum of exponents over every
/// minimal cover is at least k", scanning exponents in {0..k}^n.
MonomialIdeal symbolic_power_by_degree_sum(const Clutter& c, std::uint32_t k,
                                           std::uint64_t max_candidates = 50'000'000);

bool in_symbolic_power(const Monomial& m, std::span<const VertexSet> minimal_covers, std::uint32_t k);

/// Is m divisible by a product of k generators (repetition allowed)?
bool member_of_power(const Monomial& m, const MonomialIdeal& ideal, std::uint32_t k);

struct PowerEquality {
  std::uint32_t k = 0;
  bool equal = true;
  std::optional<Monomial> witness;  // generator of I^(k) outside I^k
  std::size_t symbolic_generators = 0;
};

/// I^k == I^(k)? Throws std::invalid_argument for the unit or empty clutter.
PowerEquality powers_equal(const Clutter& c, std::uint32_t k);

struct TorsionFreeResult {
  bool normally_torsion_free = true;
  std::uint32_t bound = 0;  // ceil(mu / 2)
  std::vector<PowerEquality> transcript;
  std::optional<PowerEquality> witness;
};

/// Decides I^k == I^(k) for all k by checking k = 2..ceil(mu/2). Exact.
/// Throws ResourceLimitError when the bound exceeds max_power.
TorsionFreeResult is_normally_torsion_free(const Clutter& c, std::uint32_t max_power = 12);

}  // namespace mengerian
