#include "loops/loop_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "loops/error.hpp"

namespace loops {

namespace {

void check_latin(std::size_t n, std::span<const int> cells) {
  std::vector<int> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      int v = cells[r * n + c];
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]++) {
        throw LoopError(ErrorKind::NotLatin, "row " + std::to_string(r),
                        static_cast<std::int64_t>(r));
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[cells[r * n + c]]++) {
        throw LoopError(ErrorKind::NotLatin, "column " + std::to_string(c),
                        static_cast<std::int64_t>(c));
      }
    }
  }
}

void check_identity(std::size_t n, std::span<const int> cells) {
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[i] != static_cast<int>(i) || cells[i * n] != static_cast<int>(i)) {
      throw LoopError(ErrorKind::NoIdentity, "element 0 is not the identity");
    }
  }
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_cycle_type(const std::vector<std::size_t>& type) {
  std::uint64_t h = 0;
  for (std::size_t len : type) h = mix(h, len);
  return h;
}

}  // namespace

LoopTable::LoopTable(std::size_t order, std::vector<Element> cells)
    : n_(order), mul_(std::move(cells)), ldiv_(n_ * n_), rdiv_(n_ * n_) {
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      Element z = mul_[x * n_ + y];
      ldiv_[x * n_ + z] = static_cast<Element>(y);
      rdiv_[z * n_ + y] = static_cast<Element>(x);
    }
  }
}

LoopTable LoopTable::validate(std::size_t order,
                              const std::vector<std::vector<int>>& cells) {
  if (cells.size() != order) {
    throw LoopError(ErrorKind::BadDimensions,
                    "expected " + std::to_string(order) + " rows");
  }
  std::vector<int> flat;
  flat.reserve(order * order);
  for (const auto& row : cells) {
    if (row.size() != order) {
      throw LoopError(ErrorKind::BadDimensions,
                      "expected " + std::to_string(order) + " columns");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_flat(order, flat);
}

LoopTable LoopTable::validate_flat(std::size_t order, std::span<const int> cells) {
  if (order == 0 || order > kMaxOrder) {
    throw LoopError(ErrorKind::BadDimensions,
                    "order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (cells.size() != order * order) {
    throw LoopError(ErrorKind::BadDimensions, "cell count does not match order");
  }
  check_latin(order, cells);
  check_identity(order, cells);
  std::vector<Element> bytes(cells.begin(), cells.end());
  return LoopTable(order, std::move(bytes));
}

LoopTable LoopTable::from_cells_unchecked(std::size_t order,
                                          std::vector<Element> cells) {
  return LoopTable(order, std::move(cells));
}

Perm left_translation(const LoopTable& q, Element x) {
  std::vector<Element> images(q.order());
  for (std::size_t y = 0; y < q.order(); ++y) images[y] = q.mul(x, static_cast<Element>(y));
  return Perm::from_images_unchecked(std::move(images));
}

Perm right_translation(const LoopTable& q, Element x) {
  std::vector<Element> images(q.order());
  for (std::size_t y = 0; y < q.order(); ++y) images[y] = q.mul(static_cast<Element>(y), x);
  return Perm::from_images_unchecked(std::move(images));
}

Perm middle_translation(const LoopTable& q, Element x) {
  // T(x)(y) = (xy)/x
  std::vector<Element> images(q.order());
  for (std::size_t y = 0; y < q.order(); ++y) {
    images[y] = q.rdiv(q.mul(x, static_cast<Element>(y)), x);
  }
  return Perm::from_images_unchecked(std::move(images));
}

LoopTable opposite(const LoopTable& q) {
  const std::size_t n = q.order();
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[x * n + y] = q.mul(static_cast<Element>(y), static_cast<Element>(x));
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

LoopTable direct_product(const LoopTable& q1, const LoopTable& q2) {
  const std::size_t n1 = q1.order();
  const std::size_t n2 = q2.order();
  if (n1 * n2 > kMaxOrder) {
    throw LoopError(ErrorKind::Overflow, "product order " + std::to_string(n1 * n2) +
                                             " exceeds " + std::to_string(kMaxOrder));
  }
  const std::size_t n = n1 * n2;
  std::vector<Element> cells(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto a = q1.mul(static_cast<Element>(u / n2), static_cast<Element>(v / n2));
      auto b = q2.mul(static_cast<Element>(u % n2), static_cast<Element>(v % n2));
      cells[u * n + v] = static_cast<Element>(a * n2 + b);
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

LoopTable principal_isotope(const LoopTable& q, Element a, Element b) {
  const std::size_t n = q.order();
  const Element e = q.mul(a, b);
  auto swap = [e](Element x) -> Element {
    if (x == 0) return e;
    if (x == e) return 0;
    return x;
  };
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element x = swap(static_cast<Element>(i));
      Element y = swap(static_cast<Element>(j));
      cells[i * n + j] = swap(q.mul(q.rdiv(x, b), q.ldiv(a, y)));
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

LoopTable relabel(const LoopTable& q, const Perm& sigma) {
  const std::size_t n = q.order();
  if (sigma.degree() != n) {
    throw LoopError(ErrorKind::DegreeMismatch, "relabel: degree differs from order");
  }
  if (sigma(0) != 0) {
    throw LoopError(ErrorKind::NoIdentity, "relabel: permutation must fix 0");
  }
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[sigma(static_cast<Element>(x)) * n + sigma(static_cast<Element>(y))] =
          sigma(q.mul(static_cast<Element>(x), static_cast<Element>(y)));
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

std::vector<Element> generating_set(const LoopTable& q) {
  const std::size_t n = q.order();
  std::vector<bool> in(n, false);
  std::vector<Element> members{0};
  in[0] = true;
  std::vector<Element> gens;
  auto close = [&] {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element z : {q.mul(members[i], members[j]), q.mul(members[j], members[i])}) {
          if (!in[z]) {
            in[z] = true;
            members.push_back(z);
          }
        }
      }
    }
  };
  for (std::size_t x = 1; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(static_cast<Element>(x));
    in[x] = true;
    members.push_back(static_cast<Element>(x));
    close();
  }
  return gens;
}

std::vector<std::uint64_t> element_fingerprints(const LoopTable& q) {
  const std::size_t n = q.order();
  std::vector<std::uint64_t> base(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto e = static_cast<Element>(x);
    std::uint64_t h = hash_cycle_type(left_translation(q, e).cycle_type());
    h = mix(h, hash_cycle_type(right_translation(q, e).cycle_type()));
    base[x] = h;
  }
  // Refine once with the invariants of the square, which isomorphisms carry
  // along with x.
  std::vector<std::uint64_t> refined(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto e = static_cast<Element>(x);
    refined[x] = mix(mix(base[x], base[q.mul(e, e)]),
                     mix(base[q.left_inv(e)], base[q.right_inv(e)]));
  }
  return refined;
}

namespace {

// Backtracking over images of a generating set. A partial map is closed
// under products of mapped elements; consistency failures prune.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const LoopTable& a, const LoopTable& b)
      : a_(a), b_(b), n_(a.order()), fa_(element_fingerprints(a)),
        fb_(element_fingerprints(b)), gens_(generating_set(a)) {}

  std::optional<Perm> run() {
    {
      auto sa = fa_, sb = fb_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    State s;
    s.fwd.assign(n_, kUnset);
    s.inv.assign(n_, kUnset);
    s.fwd[0] = 0;
    s.inv[0] = 0;
    s.domain.push_back(0);
    s.closed_upto = 0;
    if (!close(s)) return std::nullopt;
    return dfs(s, 0);
  }

 private:
  static constexpr int kUnset = -1;
  struct State {
    std::vector<int> fwd, inv;
    std::vector<Element> domain;
    std::size_t closed_upto = 0;
  };

  bool assign(State& s, Element x, Element y) {
    if (s.fwd[x] != kUnset) return s.fwd[x] == y;
    if (s.inv[y] != kUnset || fa_[x] != fb_[y]) return false;
    s.fwd[x] = y;
    s.inv[y] = x;
    s.domain.push_back(x);
    return true;
  }

  bool close(State& s) {
    for (; s.closed_upto < s.domain.size(); ++s.closed_upto) {
      const Element u = s.domain[s.closed_upto];
      for (std::size_t j = 0; j <= s.closed_upto; ++j) {
        const Element v = s.domain[j];
        const auto fu = static_cast<Element>(s.fwd[u]);
        const auto fv = static_cast<Element>(s.fwd[v]);
        if (!assign(s, a_.mul(u, v), b_.mul(fu, fv))) return false;
        if (!assign(s, a_.mul(v, u), b_.mul(fv, fu))) return false;
      }
    }
    return true;
  }

  std::optional<Perm> dfs(const State& s, std::size_t gi) {
    if (s.domain.size() == n_) {
      std::vector<Element> images(n_);
      for (std::size_t x = 0; x < n_; ++x) images[x] = static_cast<Element>(s.fwd[x]);
      return Perm::from_images_unchecked(std::move(images));
    }
    while (gi < gens_.size() && s.fwd[gens_[gi]] != kUnset) ++gi;
    if (gi == gens_.size()) return std::nullopt;
    const Element g = gens_[gi];
    for (std::size_t y = 1; y < n_; ++y) {
      if (s.inv[y] != kUnset || fb_[y] != fa_[g]) continue;
      State next = s;
      if (!assign(next, g, static_cast<Element>(y)) || !close(next)) continue;
      if (auto found = dfs(next, gi + 1)) return found;
    }
    return std::nullopt;
  }

  const LoopTable& a_;
  const LoopTable& b_;
  std::size_t n_;
  std::vector<std::uint64_t> fa_, fb_;
  std::vector<Element> gens_;
};

}  // namespace

std::optional<Perm> isomorphic(const LoopTable& q1, const LoopTable& q2) {
  if (q1.order() != q2.order()) {
    throw LoopError(ErrorKind::OrderMismatch, "isomorphic: orders differ");
  }
  return IsomorphismSearch(q1, q2).run();
}

LoopTable cyclic_group(std::size_t n) {
  if (n == 0 || n > kMaxOrder) {
    throw LoopError(ErrorKind::BadDimensions, "cyclic_group: bad order");
  }
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) cells[x * n + y] = static_cast<Element>((x + y) % n);
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

LoopTable trivial_loop() { return cyclic_group(1); }

}  // namespace loops
