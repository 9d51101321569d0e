#include "loops/perm_group.hpp"

#include <algorithm>

#include "loops/error.hpp"

namespace loops {

SubloopSet::SubloopSet(std::size_t parent_order, const std::vector<Element>& members)
    : n_(parent_order) {
  for (Element x : members) {
    if (x >= parent_order) throw LoopError(ErrorKind::DegreeMismatch, "member out of range");
    mask_.set(x);
  }
}

SubloopSet SubloopSet::all(std::size_t parent_order) {
  SubloopSet s(parent_order);
  for (std::size_t x = 0; x < parent_order; ++x) s.mask_.set(x);
  return s;
}

SubloopSet SubloopSet::identity_only(std::size_t parent_order) {
  SubloopSet s(parent_order);
  s.mask_.set(0);
  return s;
}

std::vector<Element> SubloopSet::members() const {
  std::vector<Element> out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (mask_.test(x)) out.push_back(static_cast<Element>(x));
  }
  return out;
}

std::string SubloopSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Element x : members()) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

SubloopSet SubloopSet::intersect(const SubloopSet& other) const {
  SubloopSet s(n_);
  s.mask_ = mask_ & other.mask_;
  return s;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  if (degree_ != other.degree_ || order() != other.order()) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& p) { return other.contains(p); });
}

PermGroup closure(std::size_t degree, std::span<const Perm> generators, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const Perm& p : generators) {
    if (p.degree() != degree) {
      throw LoopError(ErrorKind::DegreeMismatch, "closure: generator of wrong degree");
    }
  }
  // Identity generators add nothing; dropping duplicates keeps BFS cheap.
  std::unordered_set<Perm, PermHash> distinct;
  for (const Perm& p : generators) {
    if (!p.is_identity() && distinct.insert(p).second) g.generators_.push_back(p);
  }
  Perm id = Perm::identity(degree);
  g.elements_.push_back(id);
  g.index_.insert(id);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const Perm& gen : g.generators_) {
      Perm next = compose(gen, g.elements_[i]);
      if (g.index_.insert(next).second) {
        if (g.elements_.size() >= cap) {
          throw LoopError(ErrorKind::Capped,
                          "group exceeds " + std::to_string(cap) + " elements",
                          static_cast<std::int64_t>(cap));
        }
        g.elements_.push_back(std::move(next));
      }
    }
  }
  return g;
}

PermGroup stabilizer(const PermGroup& group, Element point) {
  PermGroup s;
  s.degree_ = group.degree_;
  for (const Perm& p : group.elements_) {
    if (p.fixes(point)) {
      s.elements_.push_back(p);
      s.index_.insert(p);
      if (!p.is_identity()) s.generators_.push_back(p);
    }
  }
  return s;
}

namespace {

std::vector<Perm> left_translations(const LoopTable& q) {
  std::vector<Perm> out;
  for (std::size_t x = 0; x < q.order(); ++x) out.push_back(left_translation(q, static_cast<Element>(x)));
  return out;
}

std::vector<Perm> right_translations(const LoopTable& q) {
  std::vector<Perm> out;
  for (std::size_t x = 0; x < q.order(); ++x) out.push_back(right_translation(q, static_cast<Element>(x)));
  return out;
}

std::vector<Perm> family_generators(const LoopTable& q, InnerFamily family) {
  std::vector<Perm> out;
  for (std::size_t x = 0; x < q.order(); ++x) {
    for (std::size_t y = 0; y < q.order(); ++y) {
      out.push_back(standard_inner(q, family, static_cast<Element>(x), static_cast<Element>(y)));
    }
  }
  return out;
}

}  // namespace

PermGroup mlt(const LoopTable& q, std::size_t cap) {
  auto gens = left_translations(q);
  auto right = right_translations(q);
  gens.insert(gens.end(), right.begin(), right.end());
  return closure(q.order(), gens, cap);
}

PermGroup mlt_left(const LoopTable& q, std::size_t cap) {
  return closure(q.order(), left_translations(q), cap);
}

PermGroup mlt_right(const LoopTable& q, std::size_t cap) {
  return closure(q.order(), right_translations(q), cap);
}

PermGroup inn(const LoopTable& q, std::size_t cap) { return stabilizer(mlt(q, cap), 0); }

PermGroup inn_left(const LoopTable& q, std::size_t cap) {
  return closure(q.order(), family_generators(q, InnerFamily::LL), cap);
}

PermGroup inn_right(const LoopTable& q, std::size_t cap) {
  return closure(q.order(), family_generators(q, InnerFamily::RR), cap);
}

const char* to_string(InnerFamily family) {
  switch (family) {
    case InnerFamily::LL: return "LL";
    case InnerFamily::RR: return "RR";
    case InnerFamily::TR: return "TR";
  }
  return "?";
}

Perm standard_inner(const LoopTable& q, InnerFamily family, Element x, Element y) {
  const std::size_t n = q.order();
  std::vector<Element> images(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto e = static_cast<Element>(s);
    switch (family) {
      case InnerFamily::LL:  // (xy) \ (x (y s))
        images[s] = q.ldiv(q.mul(x, y), q.mul(x, q.mul(y, e)));
        break;
      case InnerFamily::RR:  // ((s y) x) / (y x)
        images[s] = q.rdiv(q.mul(q.mul(e, y), x), q.mul(y, x));
        break;
      case InnerFamily::TR:  // x \ (s x)
        images[s] = q.ldiv(x, q.mul(e, x));
        break;
    }
  }
  return Perm::from_images_unchecked(std::move(images));
}

std::vector<StandardGenerator> standard_generators(const LoopTable& q) {
  std::vector<StandardGenerator> out;
  const std::size_t n = q.order();
  for (auto family : {InnerFamily::LL, InnerFamily::RR}) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
        out.push_back({family, ex, ey, standard_inner(q, family, ex, ey)});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto ex = static_cast<Element>(x);
    out.push_back({InnerFamily::TR, ex, 0, standard_inner(q, InnerFamily::TR, ex, 0)});
  }
  return out;
}

std::vector<Perm> standard_generator_perms(const LoopTable& q) {
  std::vector<Perm> out;
  for (auto& g : standard_generators(q)) out.push_back(std::move(g.perm));
  return out;
}

bool is_normal_subgroup(const PermGroup& h_group, const PermGroup& g_group) {
  if (h_group.degree() != g_group.degree()) {
    throw LoopError(ErrorKind::DegreeMismatch, "is_normal_subgroup: degrees differ");
  }
  for (const Perm& g : g_group.generators()) {
    const Perm g_inv = invert(g);
    for (const Perm& h : h_group.generators()) {
      if (!h_group.contains(compose(g, compose(h, g_inv)))) return false;
    }
  }
  return true;
}

SubloopSet fixed_points(std::size_t degree, std::span<const Perm> perms) {
  SubloopSet s = SubloopSet::all(degree);
  for (const Perm& p : perms) {
    if (p.degree() != degree) throw LoopError(ErrorKind::DegreeMismatch, "fixed_points");
    for (std::size_t x = 0; x < degree; ++x) {
      if (!p.fixes(static_cast<Element>(x))) s.erase(static_cast<Element>(x));
    }
  }
  return s;
}

SubloopSet fixed_points(const PermGroup& group) {
  return fixed_points(group.degree(), group.generators());
}

Perm commutator(const Perm& a, const Perm& b) {
  return compose(invert(a), compose(invert(b), compose(a, b)));
}

Perm commutator_LR(const LoopTable& q, Element y, Element x) {
  return commutator(left_translation(q, y), right_translation(q, x));
}

}  // namespace loops
