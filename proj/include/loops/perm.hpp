#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace loops {

// Element ids of a finite loop. Loops are limited to kMaxOrder elements, so a
// byte is enough.
using Element = std::uint8_t;

// A bijection on {0, ..., n-1}, stored as its image sequence.
//
// Composition convention, used everywhere in the library:
//   compose(p, q)(x) == p(q(x))
// i.e. the right-hand factor acts first, as with ordinary function
// composition. Products of translations such as L_x R_y therefore mean
// "apply R_y, then L_x".
class Perm {
 public:
  Perm() = default;

  // Throws LoopError(DegreeMismatch) unless `images` is a permutation.
  explicit Perm(std::vector<Element> images);

  static Perm identity(std::size_t degree);
  // No validation; callers guarantee bijectivity.
  static Perm from_images_unchecked(std::vector<Element> images);

  std::size_t degree() const { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  Element apply(Element x) const { return images_[x]; }
  std::span<const Element> images() const { return images_; }

  bool is_identity() const;
  bool fixes(Element x) const { return images_[x] == x; }

  // Cycle notation with 0-based points, e.g. "(0 2)(1 3)"; "()" for identity.
  std::string cycles() const;
  // Sorted cycle lengths including fixed points.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Element> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm invert(const Perm& p);
Element apply(const Perm& p, Element x);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// p^k for any integer k.
Perm power(const Perm& p, int k);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace loops
