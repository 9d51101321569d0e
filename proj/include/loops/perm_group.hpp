#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm.hpp"
#include "loops/subloop_set.hpp"

namespace loops {

inline constexpr std::size_t kDefaultGroupCap = std::size_t{1} << 20;

// A permutation group with its full element list. Built by closure().
class PermGroup {
 public:
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  // Breadth-first order from the identity; the identity is elements()[0].
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  // Same element set, regardless of generators or enumeration order.
  bool same_elements(const PermGroup& other) const;

 private:
  friend PermGroup closure(std::size_t degree, std::span<const Perm> generators,
                           std::size_t cap);
  friend PermGroup stabilizer(const PermGroup& group, Element point);

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_set<Perm, PermHash> index_;
};

// Breadth-first closure of `generators`. Throws Capped (detail = cap) if the
// group has more than `cap` elements and DegreeMismatch if a generator has
// the wrong degree.
PermGroup closure(std::size_t degree, std::span<const Perm> generators,
                  std::size_t cap = kDefaultGroupCap);

// Elements of `group` fixing `point`; its generators are those elements.
PermGroup stabilizer(const PermGroup& group, Element point);

// Mlt(Q) = <L_x, R_x>, Mlt_lambda(Q) = <L_x>, Mlt_rho(Q) = <R_x>.
PermGroup mlt(const LoopTable& q, std::size_t cap = kDefaultGroupCap);
PermGroup mlt_left(const LoopTable& q, std::size_t cap = kDefaultGroupCap);
PermGroup mlt_right(const LoopTable& q, std::size_t cap = kDefaultGroupCap);

// Inn(Q): stabilizer of 0 in Mlt(Q).
PermGroup inn(const LoopTable& q, std::size_t cap = kDefaultGroupCap);
// Inn_lambda(Q) = <L_{xy}^-1 L_x L_y>, Inn_rho(Q) = <R_{yx}^-1 R_x R_y>.
PermGroup inn_left(const LoopTable& q, std::size_t cap = kDefaultGroupCap);
PermGroup inn_right(const LoopTable& q, std::size_t cap = kDefaultGroupCap);

enum class InnerFamily { LL, RR, TR };
const char* to_string(InnerFamily family);

struct StandardGenerator {
  InnerFamily family;
  Element x;
  Element y;  // unused (0) for TR
  Perm perm;
};

// L_{xy}^-1 L_x L_y (LL), R_{yx}^-1 R_x R_y (RR) for all x, y and
// L_x^-1 R_x (TR) for all x.
std::vector<StandardGenerator> standard_generators(const LoopTable& q);
Perm standard_inner(const LoopTable& q, InnerFamily family, Element x, Element y);
std::vector<Perm> standard_generator_perms(const LoopTable& q);

// Whether g h g^-1 lies in `h_group` for every generator g of `g_group` and
// every generator h of `h_group`. Membership is exact because `h_group` is
// materialized. Throws DegreeMismatch on differing degrees.
bool is_normal_subgroup(const PermGroup& h_group, const PermGroup& g_group);

// Points fixed by every permutation in `perms`; all points when empty.
SubloopSet fixed_points(std::size_t degree, std::span<const Perm> perms);
SubloopSet fixed_points(const PermGroup& group);

// [a, b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);
// [L_y, R_x] = L_y^-1 R_x^-1 L_y R_x.
Perm commutator_LR(const LoopTable& q, Element y, Element x);

}  // namespace loops
