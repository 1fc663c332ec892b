#include "stanley/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

void check_variable(int n, int j) {
  if (j < 1 || j > n) {
    throw InputError("variable index x" + std::to_string(j) + " outside ring with " +
                     std::to_string(n) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

Monomial Monomial::one(int n) {
  if (n < 0) throw InputError("negative variable count");
  return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int j) {
  check_variable(n, j);
  auto m = one(n);
  m.exponents_[static_cast<std::size_t>(j - 1)] = 1;
  return m;
}

Monomial Monomial::from_mask(int n, SubsetMask mask) {
  auto m = one(n);
  for (int i = 0; i < n && i < kMaxMaskVars; ++i) {
    if (mask >> i & 1U) m.exponents_[static_cast<std::size_t>(i)] = 1;
  }
  if (n < kMaxMaskVars && (mask >> n) != 0) throw InputError("mask has bits outside [n]");
  return m;
}

Monomial Monomial::product(int n, std::initializer_list<int> vars) {
  auto m = one(n);
  for (int j : vars) {
    check_variable(n, j);
    ++m.exponents_[static_cast<std::size_t>(j - 1)];
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e <= 1; });
}

SubsetMask Monomial::support() const {
  if (num_vars() > kMaxMaskVars) throw ResourceError("too many variables for a subset mask");
  SubsetMask mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) mask |= SubsetMask{1} << i;
  }
  return mask;
}

std::optional<SubsetMask> Monomial::to_mask() const {
  if (!is_squarefree()) return std::nullopt;
  return support();
}

bool Monomial::divides(const Monomial& other) const {
  if (num_vars() != other.num_vars()) throw InputError("monomials live in different rings");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::times_variable(int j) const {
  check_variable(num_vars(), j);
  auto m = *this;
  ++m.exponents_[static_cast<std::size_t>(j - 1)];
  return m;
}

Monomial Monomial::divide_variable_if_possible(int j) const {
  check_variable(num_vars(), j);
  auto m = *this;
  auto& e = m.exponents_[static_cast<std::size_t>(j - 1)];
  if (e > 0) --e;
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.num_vars() <=> b.num_vars(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Reverse lexicographic on exponent vectors: more weight on early variables sorts first.
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if (auto c = b.exponents_[i] <=> a.exponents_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace stanley
