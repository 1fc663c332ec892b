#include <algorithm>

#include "stanley/binomial.hpp"
#include "stanley/engine.hpp"
#include "stanley/errors.hpp"

namespace stanley {

AlphaTest alpha_test(std::span<const std::int64_t> beta, int k) {
  if (k < 0) throw InputError("alpha-test level must be nonnegative");
  if (beta.size() < static_cast<std::size_t>(k) + 1) {
    throw InputError("alpha-test at level " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                     " level counts, got " + std::to_string(beta.size()));
  }
  AlphaTest out;
  out.alpha.reserve(static_cast<std::size_t>(k) + 1);
  for (int t = 0; t <= k; ++t) {
    std::int64_t a = beta[static_cast<std::size_t>(t)];
    for (int j = 0; j < t; ++j) {
      a = checked_sub(a, checked_mul(binomial(k - j, t - j), out.alpha[static_cast<std::size_t>(j)]));
    }
    out.alpha.push_back(a);
    if (a < 0) out.pass = false;
  }
  return out;
}

AlphaTest alpha_test(std::span<const std::size_t> beta, int k) {
  std::vector<std::int64_t> wide(beta.begin(), beta.end());
  return alpha_test(std::span<const std::int64_t>(wide), k);
}

int alpha_upper_bound(const SubsetPoset& poset) {
  const int n = poset.num_vars();
  for (int k = 0; k <= n; ++k) {
    if (!alpha_test(poset.level_counts(), k).pass) return k - 1;
  }
  return n;
}

int empty_cut_bound(const SubsetPoset& poset) {
  if (poset.empty()) throw InputError("empty-cut bound of the empty poset");
  const auto maximal = poset.maximal_members();
  int best = poset.num_vars();
  for (SubsetMask m : maximal) best = std::min(best, subset_size(m));
  return best;
}

}  // namespace stanley
