#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "loops/perm.hpp"

namespace loops {

// Largest supported loop order. Element subsets are bitsets of this width.
inline constexpr std::size_t kMaxOrder = 128;

// A finite loop given by its Cayley table. Element 0 is the two-sided
// identity. Instances are immutable and only obtainable through validate()
// (or the constructions below, which produce valid tables by construction),
// so every LoopTable is a Latin square with identity 0.
class LoopTable {
 public:
  // Errors: BadDimensions, NotLatin (detail = offending row/column index),
  // NoIdentity.
  static LoopTable validate(std::size_t order,
                            const std::vector<std::vector<int>>& cells);
  // Same as validate() for a flat row-major cell vector.
  static LoopTable validate_flat(std::size_t order, std::span<const int> cells);

  std::size_t order() const { return n_; }

  Element mul(Element x, Element y) const { return mul_[x * n_ + y]; }
  // x\y: the unique z with x*z = y.
  Element ldiv(Element x, Element y) const { return ldiv_[x * n_ + y]; }
  // x/y: the unique z with z*y = x.
  Element rdiv(Element x, Element y) const { return rdiv_[x * n_ + y]; }

  // x^lambda = 1/x, so left_inv(x)*x = 1.
  Element left_inv(Element x) const { return rdiv(0, x); }
  // x^rho = x\1, so x*right_inv(x) = 1.
  Element right_inv(Element x) const { return ldiv(x, 0); }

  // Row-major multiplication table.
  std::span<const Element> cells() const { return mul_; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

  // Trusted constructor for tables that are Latin with identity 0 by
  // construction. Used by the constructions and the search engine.
  static LoopTable from_cells_unchecked(std::size_t order,
                                        std::vector<Element> cells);

 private:
  LoopTable(std::size_t order, std::vector<Element> cells);

  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
};

// Translations. L(x): y -> xy, R(x): y -> yx, T(x) = R(x)^-1 L(x).
Perm left_translation(const LoopTable& q, Element x);
Perm right_translation(const LoopTable& q, Element x);
Perm middle_translation(const LoopTable& q, Element x);

// Transposed table: x*y := yx.
LoopTable opposite(const LoopTable& q);

// Componentwise product on pairs (a, b), encoded as a * q2.order() + b.
// Throws Overflow when the product order exceeds kMaxOrder.
LoopTable direct_product(const LoopTable& q1, const LoopTable& q2);

// x o y = (x/b)(a\y). Its identity ab is moved to id 0 by the transposition
// (0 ab); all other ids are unchanged.
LoopTable principal_isotope(const LoopTable& q, Element a, Element b);

// Table of the loop obtained by renaming x to sigma(x). sigma must fix 0.
LoopTable relabel(const LoopTable& q, const Perm& sigma);

// An isomorphism f: q1 -> q2 with f(xy) = f(x)f(y), if one exists.
// Throws OrderMismatch when the orders differ.
std::optional<Perm> isomorphic(const LoopTable& q1, const LoopTable& q2);

// Greedy generating set: repeatedly adds the least element outside the
// subloop generated so far.
std::vector<Element> generating_set(const LoopTable& q);

// Per-element isomorphism invariant built from the cycle types of L(x) and
// R(x) and the translation cycle types of x's powers.
std::vector<std::uint64_t> element_fingerprints(const LoopTable& q);

// Small named loops.
LoopTable cyclic_group(std::size_t n);
LoopTable trivial_loop();

}  // namespace loops
