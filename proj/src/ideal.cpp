#include "stanley/ideal.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

MonomialIdeal MonomialIdeal::unit(int n) {
  const Monomial one = Monomial::one(n);
  return minimalize(std::span<const Monomial>(&one, 1), n);
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.num_vars() != n_) throw InputError("monomial and ideal live in different rings");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw InputError("ideals live in different rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal minimalize(std::span<const Monomial> gens, int n) {
  if (n < 0) throw InputError("negative variable count");
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  for (const auto& g : sorted) {
    if (g.num_vars() != n) {
      throw InputError("generator " + g.to_string() + " has " + std::to_string(g.num_vars()) +
                       " variables, expected " + std::to_string(n));
    }
  }
  // Canonical order is degree-first, so any divisor of g precedes g.
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  MonomialIdeal ideal(n);
  for (auto& g : sorted) {
    const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) ideal.gens_.push_back(std::move(g));
  }
  return ideal;
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, int j) {
  if (j < 1 || j > ideal.num_vars()) throw InputError("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(g.divide_variable_if_possible(j));
  return minimalize(gens, ideal.num_vars());
}

MonomialIdeal add_variable(const MonomialIdeal& ideal, int j) {
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(Monomial::variable(ideal.num_vars(), j));
  return minimalize(gens, ideal.num_vars());
}

MonomialIdeal line_ideal(int n) {
  if (n < 2) throw InputError("line ideal needs n >= 2, got " + std::to_string(n));
  std::vector<Monomial> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Monomial::product(n, {i, i + 1}));
  return minimalize(gens, n);
}

MonomialIdeal cycle_ideal(int n) {
  if (n < 3) throw InputError("cycle ideal needs n >= 3, got " + std::to_string(n));
  std::vector<Monomial> gens = line_ideal(n).generators();
  gens.push_back(Monomial::product(n, {n, 1}));
  return minimalize(gens, n);
}

MonomialIdeal veronese_ideal(int n, int d) {
  if (n < 1 || d < 1 || d > n || n > kMaxMaskVars) {
    throw InputError("veronese ideal needs 1 <= d <= n, got n=" + std::to_string(n) +
                     " d=" + std::to_string(d));
  }
  std::vector<Monomial> gens;
  // Gosper's hack over all d-subsets of [n].
  std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    gens.push_back(Monomial::from_mask(n, static_cast<SubsetMask>(mask)));
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return minimalize(gens, n);
}

MonomialIdeal edge_ideal(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Monomial> gens;
  for (auto [a, b] : edges) {
    if (a == b) throw InputError("graph edge is a loop");
    gens.push_back(Monomial::product(n, {a, b}));
  }
  return minimalize(gens, n);
}

GeneratorSplit generator_split(const MonomialIdeal& larger, const MonomialIdeal& smaller) {
  if (!larger.contains(smaller)) {
    throw InputError("ideal " + smaller.to_string() + " is not contained in " + larger.to_string());
  }
  GeneratorSplit split;
  for (const auto& u : larger.generators()) {
    if (smaller.contains(u)) {
      split.common.push_back(u);
    } else {
      split.extra.push_back(u);
    }
  }
  split.common_count = split.common.size();
  return split;
}

}  // namespace stanley
