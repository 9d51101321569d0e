#include "loops/error.hpp"
#include "loops/varieties.hpp"

namespace loops {

bool is_autotopism(const LoopTable& q, const Perm& alpha, const Perm& beta,
                   const Perm& gamma) {
  const std::size_t n = q.order();
  if (alpha.degree() != n || beta.degree() != n || gamma.degree() != n) {
    throw LoopError(ErrorKind::DegreeMismatch, "is_autotopism: degree differs from order");
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ey = static_cast<Element>(y);
      if (q.mul(alpha(ex), beta(ey)) != gamma(q.mul(ex, ey))) return false;
    }
  }
  return true;
}

std::optional<Autotopism> Autotopism::make(const LoopTable& q, Perm alpha, Perm beta,
                                           Perm gamma) {
  if (!is_autotopism(q, alpha, beta, gamma)) return std::nullopt;
  return Autotopism(std::move(alpha), std::move(beta), std::move(gamma));
}

Autotopism operator*(const Autotopism& a, const Autotopism& b) {
  return Autotopism(a.alpha_ * b.alpha_, a.beta_ * b.beta_, a.gamma_ * b.gamma_);
}

Autotopism Autotopism::inverse() const {
  return Autotopism(invert(alpha_), invert(beta_), invert(gamma_));
}

bool nucleus_membership_from_autotopism(const LoopTable& q, Element a, NucleusKind kind) {
  const Perm id = Perm::identity(q.order());
  switch (kind) {
    case NucleusKind::Left: {
      const Perm la = left_translation(q, a);
      return is_autotopism(q, la, id, la);
    }
    case NucleusKind::Middle:
      return is_autotopism(q, invert(right_translation(q, a)), left_translation(q, a), id);
    case NucleusKind::Right: {
      const Perm ra = right_translation(q, a);
      return is_autotopism(q, id, ra, ra);
    }
  }
  return false;
}

bool is_left_pseudoautomorphism(const LoopTable& q, const Perm& beta, Element c) {
  if (beta.degree() != q.order()) {
    throw LoopError(ErrorKind::DegreeMismatch, "pseudoautomorphism: degree differs from order");
  }
  const Perm outer = left_translation(q, c) * beta;
  return is_autotopism(q, outer, beta, outer);
}

bool is_right_pseudoautomorphism(const LoopTable& q, const Perm& alpha, Element c) {
  if (alpha.degree() != q.order()) {
    throw LoopError(ErrorKind::DegreeMismatch, "pseudoautomorphism: degree differs from order");
  }
  const Perm outer = right_translation(q, c) * alpha;
  return is_autotopism(q, alpha, outer, outer);
}

Element companion_of_left_inner(const LoopTable& q, Element x, Element y) {
  return q.mul(q.rdiv(y, q.right_inv(x)), q.right_inv(q.mul(x, y)));
}

Element companion_of_right_inner(const LoopTable& q, Element x, Element y) {
  return q.mul(q.left_inv(q.mul(y, x)), q.ldiv(q.left_inv(x), y));
}

LoopTable left_companion_isotope(const LoopTable& q, Element c) {
  const std::size_t n = q.order();
  std::vector<Element> cells(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      cells[u * n + v] =
          q.ldiv(c, q.mul(q.mul(c, static_cast<Element>(u)), static_cast<Element>(v)));
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

LoopTable right_companion_isotope(const LoopTable& q, Element c) {
  const std::size_t n = q.order();
  std::vector<Element> cells(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      cells[u * n + v] =
          q.rdiv(q.mul(static_cast<Element>(u), q.mul(static_cast<Element>(v), c)), c);
    }
  }
  return LoopTable::from_cells_unchecked(n, std::move(cells));
}

GLoopReport g_loop_report(const LoopTable& q) {
  const std::size_t n = q.order();
  GLoopReport report;
  report.by_isotopes = true;
  for (std::size_t a = 0; a < n && report.by_isotopes; ++a) {
    for (std::size_t b = 0; b < n && report.by_isotopes; ++b) {
      if (!isomorphic(q, principal_isotope(q, static_cast<Element>(a), static_cast<Element>(b)))) {
        report.by_isotopes = false;
      }
    }
  }
  report.by_companions = true;
  for (std::size_t c = 0; c < n && report.by_companions; ++c) {
    const auto ec = static_cast<Element>(c);
    auto left = isomorphic(q, left_companion_isotope(q, ec));
    auto right = isomorphic(q, right_companion_isotope(q, ec));
    if (!left || !right || !is_left_pseudoautomorphism(q, *left, ec) ||
        !is_right_pseudoautomorphism(q, *right, ec)) {
      report.by_companions = false;
    }
  }
  return report;
}

bool is_g_loop(const LoopTable& q) {
  const GLoopReport report = g_loop_report(q);
  if (report.by_isotopes != report.by_companions) {
    throw LoopError(ErrorKind::Inconsistent,
                    "G-loop characterizations disagree (isotopes vs companions)");
  }
  return report.by_isotopes;
}

bool osborn_alpha_audit(const LoopTable& q) {
  const std::size_t n = q.order();
  const Perm id = Perm::identity(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<Element>(xi);
    const Element xl = q.left_inv(x);
    const Perm lx = left_translation(q, x), rx = right_translation(q, x);
    const Perm lxl = left_translation(q, xl), rxl = right_translation(q, xl);
    const Perm first = invert(rx) * lx * rx;
    const Perm second = lx * rx * rxl;
    const Perm third = invert(lxl);
    if (first != second || second != third) return false;
    if (rx * rxl * lxl * lx != id) return false;
  }
  return true;
}

}  // namespace loops
