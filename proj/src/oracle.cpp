#include <algorithm>
#include <unordered_map>

#include "stanley/engine.hpp"
#include "stanley/errors.hpp"

namespace stanley {

namespace {

// Plain recursion over every interval partition: the first uncovered member
// in (size, mask) order must be the bottom of its interval; try every top.
class PartitionEnumerator {
public:
  explicit PartitionEnumerator(const SubsetPoset& poset) : members_(poset.members()) {
    std::sort(members_.begin(), members_.end(), [](SubsetMask a, SubsetMask b) {
      return subset_size(a) != subset_size(b) ? subset_size(a) < subset_size(b) : a < b;
    });
    for (std::size_t i = 0; i < members_.size(); ++i) index_[members_[i]] = i;
    covered_.assign(members_.size(), 0);
  }

  void run() { recurse(kUnbounded); }

  int best() const { return best_; }
  const std::vector<Interval>& best_partition() const { return best_partition_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  static constexpr int kUnbounded = 1 << 20;

  // Cells of [bottom, top] that are members and still free, or empty if any is not.
  bool collect_free_cells(const Interval& iv, std::vector<std::size_t>& cells) const {
    cells.clear();
    bool ok = true;
    iv.for_each_cell([&](SubsetMask cell) {
      if (!ok) return;
      auto it = index_.find(cell);
      if (it == index_.end() || covered_[it->second]) {
        ok = false;
        return;
      }
      cells.push_back(it->second);
    });
    return ok;
  }

  void recurse(int current_min) {
    ++nodes_;
    const auto first = std::find(covered_.begin(), covered_.end(), 0);
    if (first == covered_.end()) {
      if (current_min > best_) {
        best_ = current_min;
        best_partition_ = chosen_;
      }
      return;
    }
    const SubsetMask bottom = members_[static_cast<std::size_t>(first - covered_.begin())];

    std::vector<SubsetMask> tops;
    for (SubsetMask m : members_) {
      if (is_subset(bottom, m)) tops.push_back(m);
    }
    // Large tops first so good partitions appear early and bound the rest.
    std::stable_sort(tops.begin(), tops.end(),
                     [](SubsetMask a, SubsetMask b) { return subset_size(a) > subset_size(b); });

    std::vector<std::size_t> cells;
    for (SubsetMask top : tops) {
      const int size = subset_size(top);
      if (std::min(current_min, size) <= best_) continue;
      const Interval iv{bottom, top};
      if (!collect_free_cells(iv, cells)) continue;
      for (auto c : cells) covered_[c] = 1;
      chosen_.push_back(iv);
      recurse(std::min(current_min, size));
      chosen_.pop_back();
      for (auto c : cells) covered_[c] = 0;
    }
  }

  std::vector<SubsetMask> members_;
  std::unordered_map<SubsetMask, std::size_t> index_;
  std::vector<char> covered_;
  std::vector<Interval> chosen_;
  std::vector<Interval> best_partition_;
  int best_ = -1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SdepthResult naive_oracle(const SubsetPoset& poset, std::size_t max_members) {
  if (poset.size() > max_members) {
    throw ResourceError("naive oracle refuses posets with more than " + std::to_string(max_members) +
                        " members (got " + std::to_string(poset.size()) + ")");
  }
  SdepthResult result;
  if (poset.empty()) {
    result.infinite = true;
    return result;
  }
  PartitionEnumerator search(poset);
  search.run();
  result.value = search.best();
  result.stats.nodes = search.nodes();
  PartitionCertificate cert;
  cert.n = poset.num_vars();
  cert.intervals = search.best_partition();
  cert.claimed_sdepth = partition_sdepth(cert.intervals);
  result.certificate = std::move(cert);
  if (result.value < poset.num_vars()) result.refutation_k = result.value + 1;
  return result;
}

}  // namespace stanley
