#include "loops/structure.hpp"

#include <algorithm>

#include "loops/error.hpp"

namespace loops {

namespace {

template <typename Pred>
SubloopSet scan(const LoopTable& q, Pred associates) {
  const std::size_t n = q.order();
  SubloopSet s(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    for (std::size_t x = 0; ok && x < n; ++x) {
      for (std::size_t y = 0; ok && y < n; ++y) {
        ok = associates(static_cast<Element>(a), static_cast<Element>(x),
                        static_cast<Element>(y));
      }
    }
    if (ok) s.insert(static_cast<Element>(a));
  }
  return s;
}

void require_subloop(const LoopTable& q, const SubloopSet& s) {
  if (s.parent_order() != q.order() || !is_subloop(q, s)) {
    throw LoopError(ErrorKind::NotASubloop, s.to_string() + " is not a subloop");
  }
}

}  // namespace

SubloopSet left_nucleus(const LoopTable& q) {
  return scan(q, [&](Element a, Element x, Element y) {
    return q.mul(a, q.mul(x, y)) == q.mul(q.mul(a, x), y);
  });
}

SubloopSet middle_nucleus(const LoopTable& q) {
  return scan(q, [&](Element a, Element x, Element y) {
    return q.mul(x, q.mul(a, y)) == q.mul(q.mul(x, a), y);
  });
}

SubloopSet right_nucleus(const LoopTable& q) {
  return scan(q, [&](Element a, Element x, Element y) {
    return q.mul(q.mul(x, y), a) == q.mul(x, q.mul(y, a));
  });
}

SubloopSet nucleus(const LoopTable& q) {
  return left_nucleus(q).intersect(middle_nucleus(q)).intersect(right_nucleus(q));
}

SubloopSet center(const LoopTable& q) {
  SubloopSet s = nucleus(q);
  for (Element a : s.members()) {
    for (std::size_t x = 0; x < q.order(); ++x) {
      if (q.mul(a, static_cast<Element>(x)) != q.mul(static_cast<Element>(x), a)) {
        s.erase(a);
        break;
      }
    }
  }
  return s;
}

SubloopSet subloop_generated(const LoopTable& q, const std::vector<Element>& seed) {
  SubloopSet s = SubloopSet::identity_only(q.order());
  std::vector<Element> members{0};
  auto add = [&](Element z) {
    if (!s.contains(z)) {
      s.insert(z);
      members.push_back(z);
    }
  };
  for (Element x : seed) {
    if (x >= q.order()) throw LoopError(ErrorKind::DegreeMismatch, "seed out of range");
    add(x);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Element u = members[i], v = members[j];
      add(q.mul(u, v));
      add(q.mul(v, u));
      add(q.ldiv(u, v));
      add(q.ldiv(v, u));
      add(q.rdiv(u, v));
      add(q.rdiv(v, u));
    }
  }
  return s;
}

bool is_subloop(const LoopTable& q, const SubloopSet& s) {
  if (!s.contains(0)) return false;
  const auto members = s.members();
  for (Element u : members) {
    for (Element v : members) {
      if (!s.contains(q.mul(u, v)) || !s.contains(q.ldiv(u, v)) || !s.contains(q.rdiv(u, v))) {
        return false;
      }
    }
  }
  return true;
}

LoopTable subloop_table(const LoopTable& q, const SubloopSet& s) {
  require_subloop(q, s);
  const auto members = s.members();
  std::vector<int> index(q.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
  const std::size_t m = members.size();
  std::vector<int> cells(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) cells[i * m + j] = index[q.mul(members[i], members[j])];
  }
  return LoopTable::validate_flat(m, cells);
}

bool is_normal_subloop(const LoopTable& q, const SubloopSet& s, std::size_t cap) {
  require_subloop(q, s);
  if (s.is_all() || s.size() == 1) return true;
  const PermGroup group = inn(q, cap);
  const auto members = s.members();
  for (const Perm& phi : group.elements()) {
    for (Element x : members) {
      if (!s.contains(phi(x))) return false;
    }
  }
  return true;
}

bool standard_generator_invariant(const LoopTable& q, const SubloopSet& s) {
  require_subloop(q, s);
  const auto members = s.members();
  for (const auto& gen : standard_generators(q)) {
    for (Element x : members) {
      if (!s.contains(gen.perm(x))) return false;
    }
  }
  return true;
}

Quotient quotient(const LoopTable& q, const SubloopSet& s, std::size_t cap) {
  if (!is_normal_subloop(q, s, cap)) {
    throw LoopError(ErrorKind::NotNormal, s.to_string() + " is not normal");
  }
  const std::size_t n = q.order();
  const auto members = s.members();
  std::vector<int> coset(n, -1);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != -1) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element m : members) {
      const Element y = q.mul(static_cast<Element>(x), m);
      if (coset[y] != -1) {
        throw LoopError(ErrorKind::IllDefined, "cosets overlap");
      }
      coset[y] = id;
    }
  }
  const std::size_t k = reps.size();
  std::vector<int> cells(k * k, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int cx = coset[x], cy = coset[y];
      const int cz = coset[q.mul(static_cast<Element>(x), static_cast<Element>(y))];
      int& cell = cells[cx * k + cy];
      if (cell == -1) {
        cell = cz;
      } else if (cell != cz) {
        throw LoopError(ErrorKind::IllDefined, "coset product depends on representatives");
      }
    }
  }
  Quotient out{LoopTable::validate_flat(k, cells), {}, reps};
  out.projection.reserve(n);
  for (int c : coset) out.projection.push_back(static_cast<Element>(c));
  return out;
}

std::vector<SubloopSet> upper_central_series(const LoopTable& q, std::size_t cap) {
  std::vector<SubloopSet> series{SubloopSet::identity_only(q.order())};
  while (!series.back().is_all()) {
    const Quotient factor = quotient(q, series.back(), cap);
    const SubloopSet z = center(factor.table);
    SubloopSet next(q.order());
    for (std::size_t x = 0; x < q.order(); ++x) {
      if (z.contains(factor.projection[x])) next.insert(static_cast<Element>(x));
    }
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LoopTable& q, std::size_t cap) {
  const auto series = upper_central_series(q, cap);
  if (!series.back().is_all()) return std::nullopt;
  return series.size() - 1;
}

}  // namespace loops
