#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "stanley/poset.hpp"

namespace stanley {

/// Which uncovered member the search branches on.
enum class BranchRule {
  lowest_level,    ///< smallest cardinality, ties by smallest mask
  fewest_options,  ///< member with the fewest live intervals (ties as above)
};

struct SearchOptions {
  BranchRule rule = BranchRule::lowest_level;
  bool alpha_prune = true;  ///< refuse at the root when the alpha-test fails
  /// Re-run the alpha recurrence on the uncovered level counts at every node.
  bool level_count_prune = false;
  bool hall_check = false;  ///< per-node matching of minimal uncovered members to free tops
  int workers = 1;
  /// Wall-clock budget. For sdepth_exact it covers the whole level scan.
  std::optional<std::chrono::milliseconds> timeout;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_alpha = 0;
  std::uint64_t prunes_existence = 0;
  std::uint64_t prunes_hall = 0;
  std::uint64_t prunes_counting = 0;
  double wall_ms = 0.0;

  SearchStats& operator+=(const SearchStats& other);
  nlohmann::json to_json() const;
};

enum class Outcome { success, refusal, timeout };

struct Decision {
  Outcome outcome = Outcome::refusal;
  /// Partition of the whole poset, present on success.
  std::optional<PartitionCertificate> certificate;
  SearchStats stats;
};

/// Decide sdepth(P) >= k.
///
/// Searches for a partition of the members of size <= k into intervals [F, G]
/// of P with |G| = k whenever |F| < k; such a partition exists iff
/// sdepth(P) >= k. On success the certificate extends it with singletons for
/// unused level-k members and for every member above level k.
/// Throws InputError when P is empty or k is outside [0, n].
Decision decide_at_least(const SubsetPoset& poset, int k, const SearchOptions& options = {});

struct SdepthResult {
  bool infinite = false;    ///< empty poset (zero module)
  bool conclusive = true;   ///< false when the budget ran out
  int value = 0;            ///< exact value, or best certified lower bound if inconclusive
  std::optional<int> upper; ///< inconclusive only: alpha-test / empty-cut bound
  std::optional<PartitionCertificate> certificate;
  std::optional<int> refutation_k;
  SearchStats stats;
};

/// Exact Stanley depth of P with a certificate. The level scan starts at
/// lower_hint (a certified lower bound, default 0) and climbs until the first refusal.
SdepthResult sdepth_exact(const SubsetPoset& poset, const SearchOptions& options = {},
                          std::optional<int> lower_hint = std::nullopt);

struct AlphaTest {
  std::vector<std::int64_t> alpha;  ///< alpha_0..alpha_k
  bool pass = true;
};

/// alpha_0 = beta_0, alpha_t = beta_t - sum_{j<t} C(k-j, t-j) alpha_j for t = 1..k.
/// A failing test (some alpha_t < 0) proves sdepth(P) < k.
/// Throws InputError if beta is shorter than k + 1 or k < 0.
AlphaTest alpha_test(std::span<const std::int64_t> beta, int k);
AlphaTest alpha_test(std::span<const std::size_t> beta, int k);

/// Largest k such that the alpha-test passes at every level up to k, i.e.
/// (first failing k) - 1; n when nothing fails.
int alpha_upper_bound(const SubsetPoset& poset);

/// min |sigma| over members sigma with no one-element extension in P.
/// Such sigma have an empty upper cut at level |sigma| + 1, so sdepth(P) <= |sigma|.
/// Throws InputError on the empty poset.
int empty_cut_bound(const SubsetPoset& poset);

/// Exhaustive search over all interval partitions of the untruncated poset.
/// Independent of decide_at_least; meant for cross-checking on small posets.
/// Throws ResourceError when |P| exceeds max_members.
SdepthResult naive_oracle(const SubsetPoset& poset, std::size_t max_members = 40);

nlohmann::json sdepth_result_to_json(const SdepthResult& result);

}  // namespace stanley
