#include "stanley/poset.hpp"

#include <algorithm>
#include <array>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

// Bit positions p in a 64-bit word whose bit i (i < 6) is clear.
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::size_t word_count(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

std::uint64_t tail_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
}

void check_vars(int n, const PosetLimits& limits) {
  if (n < 0) throw InputError("negative variable count");
  const int cap = std::min(limits.max_vars, kMaxPosetVars);
  if (n > cap) {
    throw ResourceError("poset over " + std::to_string(n) + " variables exceeds the cap of " +
                        std::to_string(cap));
  }
}

// In place: a set bit at m propagates to every superset of m.
void close_upward(std::vector<std::uint64_t>& words, int n) {
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      for (auto& w : words) w |= (w & kLowHalf[static_cast<std::size_t>(i)]) << shift;
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t w = 0; w < words.size(); ++w) {
        if ((w & stride) != 0) words[w] |= words[w ^ stride];
      }
    }
  }
}

}  // namespace

std::vector<int> mask_elements(SubsetMask mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask) + 1);
  return out;
}

SubsetMask mask_from_elements(std::span<const int> elements, int n) {
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > n || e > kMaxMaskVars) {
      throw InputError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    }
    mask |= SubsetMask{1} << (e - 1);
  }
  return mask;
}

std::string format_subset(SubsetMask mask) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(mask)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

SubsetPoset::SubsetPoset(int n) : n_(n) {
  check_vars(n, PosetLimits{kMaxPosetVars});
  words_.assign(word_count(n), 0);
  levels_.assign(static_cast<std::size_t>(n) + 1, 0);
}

SubsetPoset SubsetPoset::full(int n) {
  std::vector<std::uint64_t> words(word_count(n), ~std::uint64_t{0});
  words.back() &= tail_mask(n);
  return from_words(n, std::move(words));
}

SubsetPoset SubsetPoset::from_members(int n, std::span<const SubsetMask> members) {
  SubsetPoset p(n);
  for (SubsetMask m : members) {
    if (m >= p.universe_size()) throw InputError("subset " + format_subset(m) + " outside [n]");
    p.words_[m >> 6] |= std::uint64_t{1} << (m & 63);
  }
  p.recount();
  return p;
}

SubsetPoset SubsetPoset::from_words(int n, std::vector<std::uint64_t> words) {
  SubsetPoset p(n);
  if (words.size() != p.words_.size() || (words.back() & ~tail_mask(n)) != 0) {
    throw InputError("membership bitset does not match 2^n");
  }
  p.words_ = std::move(words);
  p.recount();
  return p;
}

void SubsetPoset::recount() {
  std::fill(levels_.begin(), levels_.end(), 0);
  size_ = 0;
  for_each_member([&](SubsetMask m) { ++levels_[static_cast<std::size_t>(subset_size(m))]; });
  for (auto c : levels_) size_ += c;
}

std::vector<SubsetMask> SubsetPoset::members() const {
  std::vector<SubsetMask> out;
  out.reserve(size_);
  for_each_member([&](SubsetMask m) { out.push_back(m); });
  return out;
}

std::vector<SubsetMask> SubsetPoset::members_at_level(int t) const {
  std::vector<SubsetMask> out;
  if (t < 0 || t > n_) return out;
  out.reserve(levels_[static_cast<std::size_t>(t)]);
  for_each_member([&](SubsetMask m) {
    if (subset_size(m) == t) out.push_back(m);
  });
  return out;
}

std::vector<SubsetMask> SubsetPoset::maximal_members() const {
  // extended[m] is set when m plus one element is a member.
  std::vector<std::uint64_t> extended(words_.size(), 0);
  for (int i = 0; i < n_; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      for (std::size_t w = 0; w < words_.size(); ++w) {
        extended[w] |= (words_[w] >> shift) & kLowHalf[static_cast<std::size_t>(i)];
      }
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((w & stride) == 0) extended[w] |= words_[w | stride];
      }
    }
  }
  for (std::size_t w = 0; w < words_.size(); ++w) extended[w] = words_[w] & ~extended[w];
  return SubsetPoset::from_words(n_, std::move(extended)).members();
}

SubsetPoset SubsetPoset::complement() const {
  std::vector<std::uint64_t> words(words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words[w] = ~words_[w];
  words.back() &= tail_mask(n_);
  return from_words(n_, std::move(words));
}

SubsetPoset SubsetPoset::intersect(const SubsetPoset& other) const {
  if (other.n_ != n_) throw InputError("posets over different ground sets");
  std::vector<std::uint64_t> words(words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words[w] = words_[w] & other.words_[w];
  return from_words(n_, std::move(words));
}

SubsetPoset poset_of_ideal(const MonomialIdeal& ideal, const PosetLimits& limits) {
  const int n = ideal.num_vars();
  check_vars(n, limits);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (const auto& g : ideal.generators()) {
    const auto mask = g.to_mask();
    if (!mask) throw InputError("generator " + g.to_string() + " is not squarefree");
    words[*mask >> 6] |= std::uint64_t{1} << (*mask & 63);
  }
  close_upward(words, n);
  return SubsetPoset::from_words(n, std::move(words));
}

SubsetPoset poset_of_quotient(const MonomialIdeal& ideal, const PosetLimits& limits) {
  return poset_of_ideal(ideal, limits).complement();
}

SubsetPoset poset_of_ideal_quotient(const MonomialIdeal& larger, const MonomialIdeal& smaller,
                                    const PosetLimits& limits) {
  if (larger.num_vars() != smaller.num_vars()) throw InputError("ideals live in different rings");
  if (!larger.contains(smaller)) {
    throw InputError("ideal " + smaller.to_string() + " is not contained in " + larger.to_string());
  }
  return poset_of_quotient(smaller, limits).intersect(poset_of_ideal(larger, limits));
}

SubsetPoset truncate(const SubsetPoset& poset, int k) {
  std::vector<std::uint64_t> words(poset.words().begin(), poset.words().end());
  poset.for_each_member([&](SubsetMask m) {
    if (subset_size(m) > k) words[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
  });
  return SubsetPoset::from_words(poset.num_vars(), std::move(words));
}

std::vector<SubsetMask> upper_cut(const SubsetPoset& poset, SubsetMask sigma, int d) {
  if (!poset.contains(sigma)) throw InputError("subset " + format_subset(sigma) + " is not a member");
  std::vector<SubsetMask> out;
  const int extra = d - subset_size(sigma);
  const int n = poset.num_vars();
  if (extra < 0 || d > n) return out;

  std::vector<SubsetMask> free_bits;
  for (int i = 0; i < n; ++i) {
    if ((sigma >> i & 1U) == 0) free_bits.push_back(SubsetMask{1} << i);
  }
  const int m = static_cast<int>(free_bits.size());
  // Gosper's hack over extra-subsets of the free positions.
  std::uint64_t pick = (std::uint64_t{1} << extra) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (pick < limit) {
    SubsetMask tau = sigma;
    for (std::uint64_t b = pick; b != 0; b &= b - 1) tau |= free_bits[static_cast<std::size_t>(std::countr_zero(b))];
    if (poset.contains(tau)) out.push_back(tau);
    if (pick == 0) break;
    const std::uint64_t low = pick & (~pick + 1);
    const std::uint64_t ripple = pick + low;
    pick = (((ripple ^ pick) >> 2) / low) | ripple;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> partition_sdepth(std::span<const Interval> intervals) {
  std::optional<int> best;
  for (const auto& iv : intervals) {
    const int s = subset_size(iv.top);
    if (!best || s < *best) best = s;
  }
  return best;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ring_mismatch: return "ring_mismatch";
    case ViolationKind::not_interval: return "not_interval";
    case ViolationKind::outside_poset: return "outside_poset";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::uncovered: return "uncovered";
    case ViolationKind::claim_mismatch: return "claim_mismatch";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::string out = to_string(kind);
  switch (kind) {
    case ViolationKind::ring_mismatch:
      return out + ": certificate and poset have different n";
    case ViolationKind::uncovered:
      return out + ": member " + format_subset(witness) + " lies in no interval";
    case ViolationKind::claim_mismatch:
      return out + ": claimed_sdepth differs from the minimum top size";
    default:
      return out + ": interval #" + std::to_string(interval_index) + " at " + format_subset(witness);
  }
}

std::optional<Violation> verify_partition(const SubsetPoset& poset, const PartitionCertificate& cert) {
  if (cert.n != poset.num_vars()) return Violation{ViolationKind::ring_mismatch};

  std::vector<std::uint64_t> covered(poset.words().size(), 0);
  for (std::size_t idx = 0; idx < cert.intervals.size(); ++idx) {
    const Interval& iv = cert.intervals[idx];
    if (!iv.well_formed()) return Violation{ViolationKind::not_interval, iv.bottom, idx};
    if (iv.top >= poset.universe_size()) return Violation{ViolationKind::outside_poset, iv.top, idx};

    std::optional<Violation> found;
    iv.for_each_cell([&](SubsetMask cell) {
      if (found) return;
      if (!poset.contains(cell)) {
        found = Violation{ViolationKind::outside_poset, cell, idx};
        return;
      }
      auto& word = covered[cell >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (cell & 63);
      if ((word & bit) != 0) {
        found = Violation{ViolationKind::overlap, cell, idx};
        return;
      }
      word |= bit;
    });
    if (found) return found;
  }

  const auto members = poset.words();
  for (std::size_t w = 0; w < members.size(); ++w) {
    if (const std::uint64_t missing = members[w] & ~covered[w]; missing != 0) {
      const auto cell = static_cast<SubsetMask>((w << 6) | static_cast<std::size_t>(std::countr_zero(missing)));
      return Violation{ViolationKind::uncovered, cell};
    }
  }

  if (partition_sdepth(cert.intervals) != cert.claimed_sdepth) return Violation{ViolationKind::claim_mismatch};
  return std::nullopt;
}

}  // namespace stanley
