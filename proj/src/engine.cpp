#include "stanley/engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "exact_cover.hpp"
#include "stanley/binomial.hpp"
#include "stanley/errors.hpp"

namespace stanley {

using Clock = std::chrono::steady_clock;
using detail::ExactCover;

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes += other.nodes;
  prunes_alpha += other.prunes_alpha;
  prunes_existence += other.prunes_existence;
  prunes_hall += other.prunes_hall;
  prunes_counting += other.prunes_counting;
  wall_ms += other.wall_ms;
  return *this;
}

nlohmann::json SearchStats::to_json() const {
  return {{"nodes", nodes},
          {"prunes_alpha", prunes_alpha},
          {"prunes_existence", prunes_existence},
          {"prunes_hall", prunes_hall},
          {"prunes_counting", prunes_counting},
          {"wall_ms", wall_ms}};
}

namespace {

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool level_order(SubsetMask a, SubsetMask b) {
  const int sa = subset_size(a);
  const int sb = subset_size(b);
  return sa != sb ? sa < sb : a < b;
}

// The exact-cover model of "partition P_{<=k} into intervals topped at level k".
// Primary items: members below level k. Secondary items: level-k members (each
// is the top of at most one interval; leftovers become singletons).
struct IntervalModel {
  int k = 0;
  std::vector<SubsetMask> low;    // item id i + 1
  std::vector<SubsetMask> tops;   // item id low.size() + i + 1
  std::vector<Interval> options;  // option index -> interval
  std::unordered_map<SubsetMask, int> item_of_mask;

  int top_item(std::size_t i) const { return static_cast<int>(low.size() + i + 1); }
};

// Intervals [F, G] with |G| = k, F a proper subset of G, every cell a member.
std::pair<IntervalModel, ExactCover> build_model(const SubsetPoset& poset, int k) {
  IntervalModel model;
  model.k = k;
  poset.for_each_member([&](SubsetMask m) {
    const int s = subset_size(m);
    if (s < k) model.low.push_back(m);
    if (s == k) model.tops.push_back(m);
  });
  std::sort(model.low.begin(), model.low.end(), level_order);
  for (std::size_t i = 0; i < model.low.size(); ++i) model.item_of_mask[model.low[i]] = static_cast<int>(i + 1);
  for (std::size_t i = 0; i < model.tops.size(); ++i) model.item_of_mask[model.tops[i]] = model.top_item(i);

  std::vector<Interval> candidates;
  std::vector<SubsetMask> bits;
  std::vector<char> valid;
  for (SubsetMask top : model.tops) {
    bits.clear();
    for (SubsetMask t = top; t != 0; t &= t - 1) bits.push_back(t & (~t + 1));
    const std::size_t full = (std::size_t{1} << bits.size()) - 1;
    valid.assign(full + 1, 0);
    // valid[s]: every cell of [mask(s), top] is a member. Supersets have larger s.
    for (std::size_t s = full + 1; s-- > 0;) {
      SubsetMask mask = 0;
      for (std::size_t b = 0; b < bits.size(); ++b) {
        if (s >> b & 1U) mask |= bits[b];
      }
      bool ok = poset.contains(mask);
      for (std::size_t b = 0; ok && b < bits.size(); ++b) {
        if ((s >> b & 1U) == 0 && !valid[s | (std::size_t{1} << b)]) ok = false;
      }
      valid[s] = ok;
      if (ok && s != full) candidates.push_back(Interval{mask, top});
    }
  }
  // Tight intervals first; ties by top then bottom so the model is deterministic.
  std::sort(candidates.begin(), candidates.end(), [](const Interval& a, const Interval& b) {
    const int fa = subset_size(a.top & ~a.bottom);
    const int fb = subset_size(b.top & ~b.bottom);
    if (fa != fb) return fa < fb;
    if (a.top != b.top) return a.top < b.top;
    return a.bottom < b.bottom;
  });

  ExactCover cover(static_cast<int>(model.low.size()), static_cast<int>(model.tops.size()));
  std::vector<int> items;
  for (const Interval& iv : candidates) {
    items.clear();
    iv.for_each_cell([&](SubsetMask cell) { items.push_back(model.item_of_mask.at(cell)); });
    cover.add_option(items);
    model.options.push_back(iv);
  }
  return {std::move(model), std::move(cover)};
}

struct SharedState {
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
};

class Searcher {
public:
  Searcher(ExactCover cover, const IntervalModel& model, const SearchOptions& options, SharedState& shared)
      : dlx_(std::move(cover)), model_(model), options_(options), shared_(shared) {
    remaining_.assign(static_cast<std::size_t>(model.k) + 1, 0);
    for (SubsetMask m : model.low) ++remaining_[static_cast<std::size_t>(subset_size(m))];
    remaining_[static_cast<std::size_t>(model.k)] = static_cast<std::int64_t>(model.tops.size());
  }

  // Bookkeeping of uncovered members per level when an option is taken or undone.
  void account(int node, int sign) {
    const Interval& iv = model_.options[static_cast<std::size_t>(dlx_.option_of(node))];
    const int f = subset_size(iv.bottom);
    for (int t = f; t <= model_.k; ++t) {
      remaining_[static_cast<std::size_t>(t)] -= sign * binomial(model_.k - f, t - f);
    }
  }
  void replay(int node) {
    dlx_.choose(node);
    account(node, 1);
  }
  void unreplay(int node) {
    account(node, -1);
    dlx_.unchoose(node);
  }

  ExactCover& dlx() { return dlx_; }
  SearchStats& stats() { return stats_; }
  std::vector<int>& path() { return path_; }

  // Returns the branching item, or 0 at a dead end.
  int select_item() {
    int best = 0;
    int best_len = 0;
    for (int i = dlx_.first_active(); i != 0; i = dlx_.next_active(i)) {
      const int len = dlx_.length(i);
      if (len == 0) {
        ++stats_.prunes_existence;
        return 0;
      }
      if (best == 0 || (options_.rule == BranchRule::fewest_options && len < best_len)) {
        best = i;
        best_len = len;
      }
    }
    return best;
  }

  bool search() {
    if (dlx_.solved()) return true;
    ++stats_.nodes;
    if ((stats_.nodes & 1023U) == 0 && should_stop()) return false;
    if (shared_.stop.load(std::memory_order_relaxed)) return false;

    if (options_.level_count_prune && !alpha_test(std::span<const std::int64_t>(remaining_), model_.k).pass) {
      ++stats_.prunes_counting;
      return false;
    }
    const int item = select_item();
    if (item == 0) return false;
    if (options_.hall_check && !hall_condition_holds()) {
      ++stats_.prunes_hall;
      return false;
    }
    dlx_.cover(item);
    for (int node = dlx_.first_in_column(item); node != item; node = dlx_.next_in_column(node)) {
      dlx_.commit(node);
      account(node, 1);
      path_.push_back(node);
      if (search()) return true;
      path_.pop_back();
      account(node, -1);
      dlx_.uncommit(node);
      if (shared_.stop.load(std::memory_order_relaxed)) break;
    }
    dlx_.uncover(item);
    return false;
  }

private:
  bool should_stop() {
    if (shared_.stop.load(std::memory_order_relaxed)) return true;
    if (shared_.deadline && Clock::now() >= *shared_.deadline) {
      shared_.timed_out.store(true);
      shared_.stop.store(true);
      return true;
    }
    return false;
  }

  // Minimal uncovered low members must be bottoms of distinct future
  // intervals, hence need distinct free tops: check a saturating matching.
  bool hall_condition_holds() {
    std::vector<int> active;
    for (int i = dlx_.first_active(); i != 0; i = dlx_.next_active(i)) active.push_back(i);
    std::unordered_map<SubsetMask, char> uncovered;
    for (int i : active) uncovered[model_.low[static_cast<std::size_t>(i - 1)]] = 1;

    std::vector<std::vector<int>> adjacency;
    for (int i : active) {
      const SubsetMask sigma = model_.low[static_cast<std::size_t>(i - 1)];
      bool minimal = true;
      if (sigma != 0) {
        // Proper subsets of sigma, from sigma minus its lowest element down to the empty set.
        for (SubsetMask sub = (sigma - 1) & sigma;; sub = (sub - 1) & sigma) {
          if (uncovered.count(sub) != 0) {
            minimal = false;
            break;
          }
          if (sub == 0) break;
        }
      }
      if (!minimal) continue;
      std::vector<int> tops;
      for (int node = dlx_.first_in_column(i); node != i; node = dlx_.next_in_column(node)) {
        const Interval& iv = model_.options[static_cast<std::size_t>(dlx_.option_of(node))];
        if (iv.bottom == sigma) tops.push_back(model_.item_of_mask.at(iv.top));
      }
      adjacency.push_back(std::move(tops));
    }

    std::unordered_map<int, int> owner;  // top item -> left vertex
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int left) {
      for (int top : adjacency[static_cast<std::size_t>(left)]) {
        if (seen[static_cast<std::size_t>(top)]) continue;
        seen[static_cast<std::size_t>(top)] = 1;
        auto it = owner.find(top);
        if (it == owner.end() || augment(it->second)) {
          owner[top] = left;
          return true;
        }
      }
      return false;
    };
    const std::size_t item_count = model_.low.size() + model_.tops.size() + 1;
    for (std::size_t left = 0; left < adjacency.size(); ++left) {
      seen.assign(item_count, 0);
      if (!augment(static_cast<int>(left))) return false;
    }
    return true;
  }

  ExactCover dlx_;
  const IntervalModel& model_;
  const SearchOptions& options_;
  SharedState& shared_;
  SearchStats stats_;
  std::vector<int> path_;
  std::vector<std::int64_t> remaining_;  // uncovered members per level 0..k
};

PartitionCertificate assemble_certificate(const SubsetPoset& poset, const IntervalModel& model,
                                          const ExactCover& dlx, std::span<const int> path) {
  PartitionCertificate cert;
  cert.n = poset.num_vars();
  std::unordered_map<SubsetMask, char> used_tops;
  for (int node : path) {
    const Interval& iv = model.options[static_cast<std::size_t>(dlx.option_of(node))];
    cert.intervals.push_back(iv);
    used_tops[iv.top] = 1;
  }
  poset.for_each_member([&](SubsetMask m) {
    const int s = subset_size(m);
    if (s > model.k || (s == model.k && used_tops.count(m) == 0)) cert.intervals.push_back(Interval{m, m});
  });
  std::sort(cert.intervals.begin(), cert.intervals.end(), [](const Interval& a, const Interval& b) {
    return level_order(a.bottom, b.bottom);
  });
  cert.claimed_sdepth = partition_sdepth(cert.intervals);
  return cert;
}

// Splits the top of the search tree into independent prefixes for workers.
// Returns true if a solution turned up while expanding (left in `solution`).
bool expand_frontier(Searcher& root, std::size_t want, std::vector<std::vector<int>>& frontier,
                     std::vector<int>& solution) {
  frontier.assign(1, {});
  for (int depth = 0; depth < 4 && frontier.size() < want; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : frontier) {
      for (int node : prefix) root.replay(node);
      if (root.dlx().solved()) {
        solution = prefix;
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) root.unreplay(*it);
        return true;
      }
      ++root.stats().nodes;
      const int item = root.select_item();
      if (item != 0) {
        for (int node = root.dlx().first_in_column(item); node != item; node = root.dlx().next_in_column(node)) {
          auto extended = prefix;
          extended.push_back(node);
          next.push_back(std::move(extended));
        }
      }
      for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) root.unreplay(*it);
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return false;
}

void validate_level(const SubsetPoset& poset, int k) {
  if (poset.empty()) throw InputError("decide_at_least on the empty poset; its depth is infinite");
  if (k < 0 || k > poset.num_vars()) {
    throw InputError("level " + std::to_string(k) + " outside [0, " + std::to_string(poset.num_vars()) + "]");
  }
}

Decision decide_with_shared(const SubsetPoset& poset, int k, const SearchOptions& options, SharedState& shared) {
  validate_level(poset, k);
  const auto start = Clock::now();
  Decision decision;

  if (options.alpha_prune && !alpha_test(poset.level_counts(), k).pass) {
    decision.stats.prunes_alpha = 1;
    decision.stats.wall_ms = elapsed_ms(start);
    return decision;
  }

  const auto [model, cover] = build_model(poset, k);

  const int workers = std::max(1, options.workers);
  std::optional<std::vector<int>> solution;
  Searcher root(cover, model, options, shared);

  if (workers == 1) {
    if (root.search()) solution = root.path();
    decision.stats = root.stats();
  } else {
    std::vector<std::vector<int>> frontier;
    std::vector<int> early;
    if (expand_frontier(root, static_cast<std::size_t>(workers) * 8, frontier, early)) {
      solution = early;
    } else {
      std::atomic<std::size_t> next_task{0};
      std::mutex mu;
      std::vector<std::thread> pool;
      std::vector<SearchStats> worker_stats(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          Searcher worker(cover, model, options, shared);
          for (;;) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= frontier.size() || shared.stop.load()) break;
            const auto& prefix = frontier[task];
            for (int node : prefix) worker.replay(node);
            worker.path() = prefix;
            if (worker.search()) {
              std::lock_guard lock(mu);
              if (!solution) solution = worker.path();
              shared.stop.store(true);
              break;
            }
            for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) worker.unreplay(*it);
          }
          worker_stats[static_cast<std::size_t>(w)] = worker.stats();
        });
      }
      for (auto& t : pool) t.join();
      decision.stats = root.stats();
      for (const auto& s : worker_stats) decision.stats += s;
    }
  }

  if (solution) {
    decision.outcome = Outcome::success;
    decision.certificate = assemble_certificate(poset, model, cover, *solution);
  } else {
    decision.outcome = shared.timed_out.load() ? Outcome::timeout : Outcome::refusal;
  }
  decision.stats.wall_ms = elapsed_ms(start);
  return decision;
}

}  // namespace

Decision decide_at_least(const SubsetPoset& poset, int k, const SearchOptions& options) {
  SharedState shared;
  if (options.timeout) shared.deadline = Clock::now() + *options.timeout;
  return decide_with_shared(poset, k, options, shared);
}

SdepthResult sdepth_exact(const SubsetPoset& poset, const SearchOptions& options, std::optional<int> lower_hint) {
  SdepthResult result;
  if (poset.empty()) {
    result.infinite = true;
    return result;
  }
  const int n = poset.num_vars();
  const auto deadline =
      options.timeout ? std::optional<Clock::time_point>(Clock::now() + *options.timeout) : std::nullopt;

  auto run = [&](int k) {
    SharedState shared;
    shared.deadline = deadline;
    Decision d = decide_with_shared(poset, k, options, shared);
    result.stats += d.stats;
    return d;
  };
  auto give_up = [&](std::optional<int> best) {
    result.conclusive = false;
    result.value = best.value_or(0);
    result.upper = std::min(alpha_upper_bound(poset), empty_cut_bound(poset));
    result.certificate.reset();
    return result;
  };

  std::optional<int> best;
  int k = std::clamp(lower_hint.value_or(0), 0, n);
  Decision first = run(k);
  if (first.outcome == Outcome::timeout) return give_up(std::nullopt);
  if (first.outcome == Outcome::refusal) {
    // The hint overshot; walk down to the first success (k = 0 always succeeds).
    while (first.outcome == Outcome::refusal && k > 0) {
      first = run(--k);
      if (first.outcome == Outcome::timeout) return give_up(std::nullopt);
    }
    result.value = k;
    result.certificate = std::move(first.certificate);
    result.refutation_k = k + 1;
    return result;
  }

  best = k;
  result.certificate = std::move(first.certificate);
  while (k < n) {
    Decision next = run(k + 1);
    if (next.outcome == Outcome::timeout) return give_up(best);
    if (next.outcome == Outcome::refusal) {
      result.refutation_k = k + 1;
      break;
    }
    ++k;
    best = k;
    result.certificate = std::move(next.certificate);
  }
  result.value = k;
  return result;
}

nlohmann::json sdepth_result_to_json(const SdepthResult& result) {
  nlohmann::json j;
  if (result.infinite) {
    j["value"] = "infinite";
  } else if (result.conclusive) {
    j["value"] = result.value;
  } else {
    j["value"] = nullptr;
    j["lower"] = result.value;
    j["upper"] = result.upper ? nlohmann::json(*result.upper) : nlohmann::json(nullptr);
  }
  j["conclusive"] = result.conclusive;
  j["refutation_k"] = result.refutation_k ? nlohmann::json(*result.refutation_k) : nlohmann::json(nullptr);
  j["stats"] = result.stats.to_json();
  return j;
}

}  // namespace stanley
