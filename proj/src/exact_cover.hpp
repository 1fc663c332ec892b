#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stanley::detail {

// Dancing-links exact cover with primary items (covered exactly once) and
// secondary items (covered at most once). Item ids are 1-based; 0 is the root
// of the active primary list. Layout follows Knuth's array form: headers
// first, then each option's nodes followed by a spacer whose top is <= 0.
class ExactCover {
public:
  ExactCover(int primary, int secondary);

  /// Items are 1-based ids; returns the option's index.
  int add_option(std::span<const int> items);

  int primary_count() const { return primary_; }
  int option_count() const { return options_; }

  bool solved() const { return rlink_[0] == 0; }
  int first_active() const { return rlink_[0]; }
  int next_active(int item) const { return rlink_[static_cast<std::size_t>(item)]; }
  int length(int item) const { return len_[static_cast<std::size_t>(item)]; }

  int first_in_column(int item) const { return dlink_[static_cast<std::size_t>(item)]; }
  int next_in_column(int node) const { return dlink_[static_cast<std::size_t>(node)]; }
  int option_of(int node) const { return option_of_[static_cast<std::size_t>(node)]; }
  int item_of(int node) const { return top_[static_cast<std::size_t>(node)]; }

  void cover(int item);
  void uncover(int item);
  /// Cover the other items of the option containing node.
  void commit(int node);
  void uncommit(int node);

  /// cover(item_of(node)) followed by commit(node); used to replay a path.
  void choose(int node) {
    cover(item_of(node));
    commit(node);
  }
  void unchoose(int node) {
    uncommit(node);
    uncover(item_of(node));
  }

private:
  void hide(int node);
  void unhide(int node);

  int primary_ = 0;
  int options_ = 0;
  std::vector<int> llink_, rlink_, len_;
  std::vector<int> top_, ulink_, dlink_, option_of_;
};

}  // namespace stanley::detail
