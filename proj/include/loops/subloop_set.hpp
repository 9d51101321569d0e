#pragma once

#include <bitset>
#include <cstddef>
#include <string>
#include <vector>

#include "loops/loop_table.hpp"

namespace loops {

// A subset of the elements of a loop of order `parent_order`. Whether it is
// closed under the loop operations is a property checked by the structure
// functions; the carrier itself is only a bitmask.
class SubloopSet {
 public:
  using Mask = std::bitset<kMaxOrder>;

  SubloopSet() = default;
  explicit SubloopSet(std::size_t parent_order) : n_(parent_order) {}
  SubloopSet(std::size_t parent_order, const std::vector<Element>& members);

  static SubloopSet all(std::size_t parent_order);
  static SubloopSet identity_only(std::size_t parent_order);

  std::size_t parent_order() const { return n_; }
  std::size_t size() const { return mask_.count(); }
  bool contains(Element x) const { return mask_.test(x); }
  void insert(Element x) { mask_.set(x); }
  void erase(Element x) { mask_.reset(x); }
  const Mask& mask() const { return mask_; }
  bool is_all() const { return size() == n_; }

  std::vector<Element> members() const;
  // "{0, 2, 4}"
  std::string to_string() const;

  bool subset_of(const SubloopSet& other) const { return (mask_ & ~other.mask_).none(); }
  SubloopSet intersect(const SubloopSet& other) const;

  friend bool operator==(const SubloopSet&, const SubloopSet&) = default;

 private:
  std::size_t n_ = 0;
  Mask mask_;
};

}  // namespace loops
