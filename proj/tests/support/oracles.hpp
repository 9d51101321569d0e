#pragma once

// Independent reference implementations used only by the tests. They share
// nothing with the search engine or the isomorphism code they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "loops/loop_table.hpp"

namespace oracle {

using loops::Element;
using loops::LoopTable;

// Every reduced Latin square of order n (row 0 and column 0 are 0..n-1),
// filled cell by cell in row-major order with no pruning beyond Latin
// conflicts.
inline std::vector<LoopTable> reduced_latin_squares(std::size_t n) {
  std::vector<LoopTable> out;
  std::vector<int> cells(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i] = static_cast<int>(i);
    cells[i * n] = static_cast<int>(i);
  }
  auto ok = [&](std::size_t r, std::size_t c, int v) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c && cells[r * n + k] == v) return false;
      if (k != r && cells[k * n + c] == v) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n * n) {
      out.push_back(LoopTable::validate_flat(n, cells));
      return;
    }
    const std::size_t r = pos / n, c = pos % n;
    if (r == 0 || c == 0) {
      self(self, pos + 1);
      return;
    }
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (!ok(r, c, v)) continue;
      cells[pos] = v;
      self(self, pos + 1);
      cells[pos] = -1;
    }
  };
  if (n == 0) return out;
  rec(rec, 0);
  return out;
}

// Tries every bijection fixing 0.
inline bool brute_isomorphic(const LoopTable& a, const LoopTable& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  std::vector<Element> f(n);
  std::iota(f.begin(), f.end(), Element{0});
  do {
    bool good = true;
    for (std::size_t x = 0; x < n && good; ++x) {
      for (std::size_t y = 0; y < n && good; ++y) {
        good = f[a.mul(static_cast<Element>(x), static_cast<Element>(y))] ==
               b.mul(f[x], f[y]);
      }
    }
    if (good) return true;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return false;
}

// One representative per isomorphism class, in input order.
inline std::vector<LoopTable> classify(const std::vector<LoopTable>& loops) {
  std::vector<LoopTable> reps;
  for (const LoopTable& q : loops) {
    bool seen = false;
    for (const LoopTable& r : reps) {
      if (brute_isomorphic(q, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(q);
  }
  return reps;
}

// Symmetric group S3 as a table; permutations of {0,1,2} in lexicographic
// order, so the identity is 0.
inline LoopTable symmetric_group_3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> cells(36);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      cells[i * 6 + j] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return LoopTable::validate_flat(6, cells);
}

// Chein's doubling M(G, 2) of a nonabelian group G: pairs (g, b) with
//   (g,0)(h,0) = (gh, 0)      (g,0)(h,1) = (hg, 1)
//   (g,1)(h,0) = (g h^-1, 1)  (g,1)(h,1) = (h^-1 g, 0)
// encoded as g + |G| b. A nonassociative Moufang loop.
inline LoopTable chein_double(const LoopTable& g) {
  const std::size_t m = g.order();
  const std::size_t n = 2 * m;
  std::vector<int> cells(n * n);
  auto inv = [&](Element h) { return g.ldiv(h, 0); };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Element a = static_cast<Element>(u % m), b = static_cast<Element>(v % m);
      const bool su = u >= m, sv = v >= m;
      int r;
      if (!su && !sv) r = g.mul(a, b);
      else if (!su && sv) r = static_cast<int>(g.mul(b, a) + m);
      else if (su && !sv) r = static_cast<int>(g.mul(a, inv(b)) + m);
      else r = g.mul(inv(b), a);
      cells[u * n + v] = r;
    }
  }
  return LoopTable::validate_flat(n, cells);
}

}  // namespace oracle
