#include "loops/canonical.hpp"

#include <utility>

namespace loops {

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LoopTable& q) : q_(q), n_(q.order()) {
    block_end_.assign(n_, 0);
    for (std::size_t k = 1; k < n_; ++k) {
      for (std::size_t i = 1; i < k; ++i) cells_.emplace_back(i, k);
      for (std::size_t j = 1; j <= k; ++j) cells_.emplace_back(k, j);
      block_end_[k] = cells_.size();
    }
    preimage_.assign(n_, 0);
    label_.assign(n_, kUnknown);
    label_[0] = 0;
  }

  std::vector<Element> run() {
    if (n_ <= 1) return {0};
    dfs(1);
    std::vector<Element> preimage = best_preimage_;
    std::vector<Element> sigma(n_);
    for (std::size_t i = 0; i < n_; ++i) sigma[preimage[i]] = static_cast<Element>(i);
    std::vector<Element> cells(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        cells[sigma[x] * n_ + sigma[y]] =
            sigma[q_.mul(static_cast<Element>(x), static_cast<Element>(y))];
      }
    }
    return cells;
  }

 private:
  static constexpr int kUnknown = -1;

  int value_at(std::size_t pos) const {
    auto [i, j] = cells_[pos];
    return label_[q_.mul(preimage_[i], preimage_[j])];
  }

  // Compares the cells of blocks 1..k with the incumbent. Cells whose label
  // is still open are known to exceed k.
  enum class Cmp { Better, Undecided, Worse };
  Cmp compare(std::size_t k) const {
    for (std::size_t pos = 0; pos < block_end_[k]; ++pos) {
      const int c = value_at(pos);
      const int b = best_[pos];
      if (c == kUnknown) return b <= static_cast<int>(k) ? Cmp::Worse : Cmp::Undecided;
      if (c != b) return c < b ? Cmp::Better : Cmp::Worse;
    }
    return Cmp::Undecided;
  }

  // depth k: labels 0..k-1 are assigned; this call assigns label k.
  void dfs(std::size_t k) {
    for (std::size_t e = 1; e < n_; ++e) {
      if (label_[e] != kUnknown) continue;
      label_[e] = static_cast<int>(k);
      preimage_[k] = static_cast<Element>(e);
      const Cmp cmp = have_best_ ? compare(k) : Cmp::Better;
      if (cmp != Cmp::Worse) {
        if (k + 1 == n_) {
          if (cmp == Cmp::Better) record();
        } else {
          dfs(k + 1);
        }
      }
      label_[e] = kUnknown;
    }
  }

  void record() {
    best_.resize(cells_.size());
    for (std::size_t pos = 0; pos < cells_.size(); ++pos) best_[pos] = value_at(pos);
    best_preimage_ = preimage_;
    have_best_ = true;
  }

  const LoopTable& q_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::size_t> block_end_;
  std::vector<Element> preimage_;
  std::vector<int> label_;
  std::vector<int> best_;
  std::vector<Element> best_preimage_;
  bool have_best_ = false;
};

}  // namespace

std::vector<Element> canonical_key(const LoopTable& q) {
  if (q.order() == 1) return {0};
  return CanonicalSearch(q).run();
}

LoopTable canonical_form(const LoopTable& q) {
  return LoopTable::from_cells_unchecked(q.order(), canonical_key(q));
}

}  // namespace loops
