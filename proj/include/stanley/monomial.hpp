#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stanley {

/// Bitmask of a subset of [n]; bit i-1 stands for element i (variable x_i).
using SubsetMask = std::uint32_t;

/// Largest ring size for which a squarefree monomial still fits a SubsetMask.
inline constexpr int kMaxMaskVars = 32;

/// A monomial x_1^{e_1} ... x_n^{e_n} in a polynomial ring with n variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  /// The constant monomial 1 in n variables.
  static Monomial one(int n);
  /// The variable x_j (1-based).
  static Monomial variable(int n, int j);
  /// x_sigma for the subset encoded by mask.
  static Monomial from_mask(int n, SubsetMask mask);
  /// Product of the listed 1-based variables, each with exponent one.
  static Monomial product(int n, std::initializer_list<int> vars);

  int num_vars() const { return static_cast<int>(exponents_.size()); }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  /// Exponent of x_j, 1-based.
  std::uint32_t exponent(int j) const { return exponents_.at(static_cast<std::size_t>(j - 1)); }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;

  /// Support of the monomial as a mask. Requires num_vars() <= kMaxMaskVars.
  SubsetMask support() const;
  /// Lossless mask view; nullopt unless squarefree.
  std::optional<SubsetMask> to_mask() const;

  /// true iff this divides other (same ring required).
  bool divides(const Monomial& other) const;

  /// this * x_j
  Monomial times_variable(int j) const;
  /// this / x_j when x_j divides this; otherwise this unchanged.
  Monomial divide_variable_if_possible(int j) const;

  /// Text form used by the ideal file format: `x1*x3^2`, or `1`.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: lower degree first, then exponent vectors compared so
  /// that x1x2 < x1x3 < x2x3.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
  std::vector<std::uint32_t> exponents_;
};

}  // namespace stanley
