#include "loops/perm.hpp"

#include <algorithm>
#include <sstream>

#include "loops/error.hpp"

namespace loops {

Perm::Perm(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Element x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw LoopError(ErrorKind::DegreeMismatch,
                      "image sequence is not a permutation");
    }
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Element>(i);
  return from_images_unchecked(std::move(images));
}

Perm Perm::from_images_unchecked(std::vector<Element> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw LoopError(ErrorKind::DegreeMismatch, "compose: degrees differ");
  }
  std::vector<Element> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = p(q(static_cast<Element>(x)));
  }
  return Perm::from_images_unchecked(std::move(images));
}

Perm invert(const Perm& p) {
  std::vector<Element> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[p(static_cast<Element>(x))] = static_cast<Element>(x);
  }
  return Perm::from_images_unchecked(std::move(images));
}

Element apply(const Perm& p, Element x) {
  if (x >= p.degree()) {
    throw LoopError(ErrorKind::DegreeMismatch, "apply: point out of range");
  }
  return p(x);
}

Perm power(const Perm& p, int k) {
  Perm base = k < 0 ? invert(p) : p;
  Perm result = Perm::identity(p.degree());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) result = compose(base, result);
  return result;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (Element x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace loops
