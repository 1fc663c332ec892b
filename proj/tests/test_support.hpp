#pragma once

#include <random>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley::testing {

/// Squarefree ideal in n variables with up to max_gens random nonempty supports.
inline MonomialIdeal random_squarefree_ideal(std::mt19937& rng, int n, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<SubsetMask> mask(1, (SubsetMask{1} << n) - 1);
  std::vector<Monomial> gens;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) gens.push_back(Monomial::from_mask(n, mask(rng)));
  return minimalize(gens, n);
}

/// A random pair I subset J: J adds a few random generators to I.
inline std::pair<MonomialIdeal, MonomialIdeal> random_pair(std::mt19937& rng, int n, int max_gens) {
  MonomialIdeal smaller = random_squarefree_ideal(rng, n, max_gens);
  const MonomialIdeal extra = random_squarefree_ideal(rng, n, 3);
  std::vector<Monomial> gens = smaller.generators();
  gens.insert(gens.end(), extra.generators().begin(), extra.generators().end());
  return {minimalize(gens, n), smaller};
}

/// Graph-side count of independent t-sets, checking every edge directly.
inline std::vector<std::size_t> independent_set_counts(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (auto [a, b] : edges) {
      if ((s >> (a - 1) & 1U) && (s >> (b - 1) & 1U)) {
        independent = false;
        break;
      }
    }
    if (independent) ++counts[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  return counts;
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
  auto e = path_edges(n);
  e.emplace_back(n, 1);
  return e;
}

}  // namespace stanley::testing
