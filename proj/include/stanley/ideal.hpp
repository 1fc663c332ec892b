#pragma once

#include <span>
#include <string>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// A monomial ideal of K[x_1..x_n], stored by its (unique) minimal generating set.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
/// Both are ordinary values and every operation below is defined on them.
/// Generators may carry exponents > 1; only poset construction needs squarefree input.
class MonomialIdeal {
public:
  /// The zero ideal of a ring with n variables.
  explicit MonomialIdeal(int n = 0) : n_(n) {}

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(int n);

  int num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  /// Membership: some generator divides m. Throws InputError on ring mismatch.
  bool contains(const Monomial& m) const;
  /// Every generator of other lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimalize(std::span<const Monomial> gens, int n);

  int n_ = 0;
  std::vector<Monomial> gens_;  // minimal, in canonical order
};

/// Drop every generator divisible by another one (and duplicates).
/// Throws InputError when some monomial does not live in a ring with n variables.
MonomialIdeal minimalize(std::span<const Monomial> gens, int n);

/// (I : x_j), 1-based j.
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, int j);

/// I + (x_j), 1-based j.
MonomialIdeal add_variable(const MonomialIdeal& ideal, int j);

/// Edge ideal of the path on [n]: (x1x2, ..., x_{n-1}x_n). Requires n >= 2.
MonomialIdeal line_ideal(int n);

/// Edge ideal of the n-cycle: line_ideal(n) + (x_n x_1). Requires n >= 3.
MonomialIdeal cycle_ideal(int n);

/// Squarefree Veronese ideal: all squarefree monomials of degree d. Requires 1 <= d <= n.
MonomialIdeal veronese_ideal(int n, int d);

/// Edge ideal of an arbitrary graph on [n]; edges are 1-based vertex pairs.
MonomialIdeal edge_ideal(int n, std::span<const std::pair<int, int>> edges);

/// Minimal generators of J sorted against I, for I contained in J.
struct GeneratorSplit {
  std::size_t common_count = 0;   ///< r: generators of J that lie in I
  std::vector<Monomial> common;   ///< those r generators
  std::vector<Monomial> extra;    ///< the q - r generators of J outside I; they generate J/I
};

/// Throws InputError unless I is contained in J.
GeneratorSplit generator_split(const MonomialIdeal& larger, const MonomialIdeal& smaller);

}  // namespace stanley
