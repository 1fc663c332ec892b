#include "exact_cover.hpp"

namespace stanley::detail {

ExactCover::ExactCover(int primary, int secondary) : primary_(primary) {
  const auto items = static_cast<std::size_t>(primary + secondary);
  llink_.resize(items + 1);
  rlink_.resize(items + 1);
  len_.assign(items + 1, 0);
  for (std::size_t i = 0; i <= items; ++i) {
    llink_[i] = static_cast<int>(i);
    rlink_[i] = static_cast<int>(i);
  }
  // Root list holds the primary items only.
  for (int i = 0; i <= primary; ++i) {
    rlink_[static_cast<std::size_t>(i)] = i == primary ? 0 : i + 1;
    llink_[static_cast<std::size_t>(i)] = i == 0 ? primary : i - 1;
  }
  top_.assign(items + 1, 0);
  ulink_.resize(items + 1);
  dlink_.resize(items + 1);
  option_of_.assign(items + 1, -1);
  for (std::size_t i = 0; i <= items; ++i) {
    ulink_[i] = static_cast<int>(i);
    dlink_[i] = static_cast<int>(i);
  }
  // Leading spacer.
  top_.push_back(0);
  ulink_.push_back(0);
  dlink_.push_back(0);
  option_of_.push_back(-1);
}

int ExactCover::add_option(std::span<const int> items) {
  const int option = options_++;
  const auto spacer_before = static_cast<int>(top_.size()) - 1;
  const auto first = static_cast<int>(top_.size());
  for (int item : items) {
    const auto node = static_cast<int>(top_.size());
    const auto i = static_cast<std::size_t>(item);
    top_.push_back(item);
    option_of_.push_back(option);
    ulink_.push_back(ulink_[i]);
    dlink_.push_back(item);
    dlink_[static_cast<std::size_t>(ulink_[i])] = node;
    ulink_[i] = node;
    ++len_[i];
  }
  const auto last = static_cast<int>(top_.size()) - 1;
  dlink_[static_cast<std::size_t>(spacer_before)] = last;
  top_.push_back(-(option + 1));
  ulink_.push_back(first);
  dlink_.push_back(0);
  option_of_.push_back(-1);
  return option;
}

void ExactCover::hide(int p) {
  for (int q = p + 1; q != p;) {
    const auto qi = static_cast<std::size_t>(q);
    const int x = top_[qi];
    if (x <= 0) {
      q = ulink_[qi];
      continue;
    }
    const int u = ulink_[qi];
    const int d = dlink_[qi];
    dlink_[static_cast<std::size_t>(u)] = d;
    ulink_[static_cast<std::size_t>(d)] = u;
    --len_[static_cast<std::size_t>(x)];
    ++q;
  }
}

void ExactCover::unhide(int p) {
  for (int q = p - 1; q != p;) {
    const auto qi = static_cast<std::size_t>(q);
    const int x = top_[qi];
    if (x <= 0) {
      q = dlink_[qi];
      continue;
    }
    const int u = ulink_[qi];
    const int d = dlink_[qi];
    dlink_[static_cast<std::size_t>(u)] = q;
    ulink_[static_cast<std::size_t>(d)] = q;
    ++len_[static_cast<std::size_t>(x)];
    --q;
  }
}

void ExactCover::cover(int item) {
  const auto i = static_cast<std::size_t>(item);
  for (int p = dlink_[i]; p != item; p = dlink_[static_cast<std::size_t>(p)]) hide(p);
  const int l = llink_[i];
  const int r = rlink_[i];
  rlink_[static_cast<std::size_t>(l)] = r;
  llink_[static_cast<std::size_t>(r)] = l;
}

void ExactCover::uncover(int item) {
  const auto i = static_cast<std::size_t>(item);
  const int l = llink_[i];
  const int r = rlink_[i];
  rlink_[static_cast<std::size_t>(l)] = item;
  llink_[static_cast<std::size_t>(r)] = item;
  for (int p = ulink_[i]; p != item; p = ulink_[static_cast<std::size_t>(p)]) unhide(p);
}

void ExactCover::commit(int node) {
  for (int p = node + 1; p != node;) {
    const auto pi = static_cast<std::size_t>(p);
    const int j = top_[pi];
    if (j <= 0) {
      p = ulink_[pi];
    } else {
      cover(j);
      ++p;
    }
  }
}

void ExactCover::uncommit(int node) {
  for (int p = node - 1; p != node;) {
    const auto pi = static_cast<std::size_t>(p);
    const int j = top_[pi];
    if (j <= 0) {
      p = dlink_[pi];
    } else {
      uncover(j);
      --p;
    }
  }
}

}  // namespace stanley::detail
