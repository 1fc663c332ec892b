#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"

namespace stanley {

/// Caps for dense poset storage. 2^24 bits is 2 MiB.
struct PosetLimits {
  int max_vars = 24;
};

/// Hard ceiling independent of configuration; masks are 32-bit.
inline constexpr int kMaxPosetVars = 30;

inline int subset_size(SubsetMask mask) { return std::popcount(mask); }
inline bool is_subset(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

/// Sorted 1-based element list of a mask, e.g. 0b101 -> {1, 3}.
std::vector<int> mask_elements(SubsetMask mask);
/// Inverse of mask_elements; elements must lie in [1, n].
SubsetMask mask_from_elements(std::span<const int> elements, int n);
/// `{1,3}` style rendering.
std::string format_subset(SubsetMask mask);

/// A family P of subsets of [n], stored as a dense membership bitset of length 2^n.
/// Immutable once built; per-level member counts are computed on construction.
class SubsetPoset {
public:
  /// The empty family over [n].
  explicit SubsetPoset(int n = 0);

  static SubsetPoset full(int n);
  static SubsetPoset from_members(int n, std::span<const SubsetMask> members);
  /// Takes ownership of a raw membership bitset; bits past 2^n must be clear.
  static SubsetPoset from_words(int n, std::vector<std::uint64_t> words);

  int num_vars() const { return n_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(SubsetMask mask) const {
    return mask < universe_size() && (words_[mask >> 6] >> (mask & 63) & 1U) != 0;
  }

  std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }
  std::span<const std::uint64_t> words() const { return words_; }

  /// beta_t = number of members of cardinality t, for t = 0..n.
  const std::vector<std::size_t>& level_counts() const { return levels_; }

  /// All members in increasing mask order.
  std::vector<SubsetMask> members() const;
  std::vector<SubsetMask> members_at_level(int t) const;
  /// Members with no proper superset in the family.
  std::vector<SubsetMask> maximal_members() const;

  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        fn(static_cast<SubsetMask>((w << 6) | static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  SubsetPoset complement() const;
  SubsetPoset intersect(const SubsetPoset& other) const;

  friend bool operator==(const SubsetPoset& a, const SubsetPoset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

private:
  void recount();

  int n_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::size_t> levels_;
};

/// P_I: supports sigma such that x_sigma lies in I. Upward closed.
/// Throws InputError for non-squarefree generators, ResourceError above limits.max_vars.
SubsetPoset poset_of_ideal(const MonomialIdeal& ideal, const PosetLimits& limits = {});

/// P_{S/I} = 2^[n] minus P_I. Downward closed; the independence complex for edge ideals.
SubsetPoset poset_of_quotient(const MonomialIdeal& ideal, const PosetLimits& limits = {});

/// P_{J/I} = P_{S/I} intersected with P_J. Throws InputError unless I is contained in J.
SubsetPoset poset_of_ideal_quotient(const MonomialIdeal& larger, const MonomialIdeal& smaller,
                                    const PosetLimits& limits = {});

/// Members of cardinality at most k.
SubsetPoset truncate(const SubsetPoset& poset, int k);

/// P_{d,sigma}: members of cardinality d containing sigma. Throws InputError if sigma is not a member.
std::vector<SubsetMask> upper_cut(const SubsetPoset& poset, SubsetMask sigma, int d);

/// The interval [F, G] = { S : F subset S subset G } of 2^[n].
struct Interval {
  SubsetMask bottom = 0;  ///< F
  SubsetMask top = 0;     ///< G

  bool well_formed() const { return is_subset(bottom, top); }
  std::uint64_t cell_count() const { return std::uint64_t{1} << subset_size(top & ~bottom); }

  /// Visits every subset between bottom and top. Requires well_formed().
  template <typename Fn>
  void for_each_cell(Fn&& fn) const {
    const SubsetMask free = top & ~bottom;
    SubsetMask sub = 0;
    do {
      fn(bottom | sub);
      sub = (sub - free) & free;
    } while (sub != 0);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// An interval list claimed to partition a poset, with its claimed Stanley depth
/// (min |G| over the intervals; absent for the empty partition).
struct PartitionCertificate {
  int n = 0;
  std::vector<Interval> intervals;
  std::optional<int> claimed_sdepth;
};

/// min |G| over the intervals; nullopt for an empty list.
std::optional<int> partition_sdepth(std::span<const Interval> intervals);

enum class ViolationKind {
  ring_mismatch,   ///< certificate n differs from the poset's
  not_interval,    ///< F is not a subset of G
  outside_poset,   ///< a cell of some interval is not a member
  overlap,         ///< a cell lies in two intervals
  uncovered,       ///< a member lies in no interval
  claim_mismatch,  ///< claimed_sdepth differs from min |G|
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  SubsetMask witness = 0;
  std::size_t interval_index = 0;  ///< offending interval, where one exists

  std::string describe() const;
};

/// nullopt when the certificate is a valid interval partition of the poset with
/// a correct claimed depth; otherwise the first failure found.
std::optional<Violation> verify_partition(const SubsetPoset& poset, const PartitionCertificate& cert);

}  // namespace stanley
