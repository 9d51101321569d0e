#include "loops/bk_construction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "loops/error.hpp"

namespace loops::bk {

void validate(const Params& params) {
  if (params.p < 2) throw LoopError(ErrorKind::InvalidSpec, "p must be a prime");
  for (std::int64_t d = 2; d * d <= params.p; ++d) {
    if (params.p % d == 0) throw LoopError(ErrorKind::InvalidSpec, "p must be a prime");
  }
  if (params.window_a <= 0 || params.window_x <= 0) {
    throw LoopError(ErrorKind::InvalidSpec, "window bounds must be positive");
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

namespace {

bool special(std::int64_t p, std::int64_t a, std::int64_t b) {
  return floor_mod(a + b, p) == 0 && floor_mod(a, p) != 0;
}

// Digits of a = a2 p^2 + a1 p + a0 with 0 <= a0, a1 < p.
struct Digits {
  std::int64_t d2, d1, d0;
};
Digits digits(std::int64_t p, std::int64_t a) {
  return {floor_div(a, p * p), floor_mod(floor_div(a, p), p), floor_mod(a, p)};
}

// For a target first coordinate c with p | c and p not dividing `known`,
// the unique partner b with known (+) b = c whose pi-index is i.
std::int64_t special_partner(std::int64_t p, std::int64_t known, std::int64_t c,
                             std::int64_t i) {
  const Digits k = digits(p, known);
  const std::int64_t b2 = c / p - k.d2;
  const std::int64_t b1 = floor_mod(i - k.d1, p);
  const std::int64_t b0 = p - k.d0;
  return b2 * p * p + b1 * p + b0;
}

}  // namespace

std::int64_t oplus(std::int64_t p, std::int64_t a, std::int64_t b) {
  if (special(p, a, b)) return p * (floor_div(a, p * p) + floor_div(b, p * p));
  return a + b;
}

Element mul(const Params& params, Element u, Element v) {
  const std::int64_t p = params.p;
  if (special(p, u.a, v.a)) {
    const std::int64_t i = floor_mod((u.a + v.a - p) / p, p);
    return {oplus(p, u.a, v.a), p * (u.x + v.x) + i};
  }
  return {u.a + v.a, u.x + v.x};
}

Element ldiv(const Params& params, Element u, Element w) {
  const std::int64_t p = params.p;
  Element v;
  if (floor_mod(w.a, p) != 0 || floor_mod(u.a, p) == 0) {
    v = {w.a - u.a, w.x - u.x};
  } else {
    const std::int64_t i = floor_mod(w.x, p);
    v = {special_partner(p, u.a, w.a, i), (w.x - i) / p - u.x};
  }
  if (!(mul(params, u, v) == w)) {
    throw LoopError(ErrorKind::Inconsistent,
                    "left division failed for " + format_element(u) + "\\" + format_element(w));
  }
  return v;
}

Element rdiv(const Params& params, Element w, Element v) {
  const std::int64_t p = params.p;
  Element u;
  if (floor_mod(w.a, p) != 0 || floor_mod(v.a, p) == 0) {
    u = {w.a - v.a, w.x - v.x};
  } else {
    const std::int64_t i = floor_mod(w.x, p);
    u = {special_partner(p, v.a, w.a, i), (w.x - i) / p - v.x};
  }
  if (!(mul(params, u, v) == w)) {
    throw LoopError(ErrorKind::Inconsistent,
                    "right division failed for " + format_element(w) + "/" + format_element(v));
  }
  return u;
}

Element standard_inner(const Params& params, InnerKind kind, Element x, Element y,
                       Element s) {
  switch (kind) {
    case InnerKind::LL:
      return ldiv(params, mul(params, x, y), mul(params, x, mul(params, y, s)));
    case InnerKind::RR:
      return rdiv(params, mul(params, mul(params, s, y), x), mul(params, y, x));
    case InnerKind::TR:
      break;
  }
  return ldiv(params, x, mul(params, s, x));
}

namespace {

// 0, 1, -1, 2, -2, ..., bound, -bound
std::vector<std::int64_t> signed_order(std::int64_t bound) {
  std::vector<std::int64_t> out{0};
  for (std::int64_t k = 1; k <= bound; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

}  // namespace

Witness nonnormal_witness(const Params& params) {
  validate(params);
  const std::vector<std::int64_t> as = signed_order(params.window_a);
  const std::vector<std::int64_t> xs = signed_order(params.window_x);
  std::vector<Element> window;
  window.reserve(as.size() * xs.size());
  for (std::int64_t a : as) {
    for (std::int64_t x : xs) window.push_back({a, x});
  }
  for (std::size_t t = 1; t < xs.size(); ++t) {
    const Element s0{0, xs[t]};
    for (const Element& x : window) {
      for (const Element& y : window) {
        const Element xy = mul(params, x, y);
        // phi^-1 = L_y^-1 L_x^-1 L_{xy}
        const Element pre = ldiv(params, y, ldiv(params, x, mul(params, xy, s0)));
        if (pre.a == 0) continue;
        if (!(standard_inner(params, InnerKind::LL, x, y, pre) == s0)) {
          throw LoopError(ErrorKind::Inconsistent, "witness replay failed");
        }
        return {x, y, s0, pre};
      }
    }
  }
  throw LoopError(ErrorKind::WitnessNotFoundInWindow,
                  "no witness with |a| <= " + std::to_string(params.window_a) +
                      " and |x| <= " + std::to_string(params.window_x));
}

namespace {

std::vector<std::int64_t> spread(std::int64_t bound, std::size_t count) {
  std::vector<std::int64_t> out{0, 1, -1, bound, -bound};
  for (std::size_t k = 1; k + 5 < count + 1; ++k) {
    const std::int64_t v = bound * static_cast<std::int64_t>(k) /
                           static_cast<std::int64_t>(count - 4);
    out.push_back(v);
    out.push_back(-v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](std::int64_t v) { return v > bound || v < -bound; });
  return out;
}

class Auditor {
 public:
  explicit Auditor(const Params& params) : params_(params) {}

  // `what` builds the message only on failure.
  template <typename F>
  void expect(bool ok, F&& what) {
    ++report_.checks;
    if (!ok && report_.violations.size() < 100) report_.violations.push_back(what());
  }

  AuditReport run() {
    const Params& P = params_;
    std::vector<Element> wide, narrow, s_wide, s_narrow;
    const auto xs_wide = spread(P.window_x, 11);
    const auto xs_narrow = spread(P.window_x, 5);
    for (std::int64_t a = -P.window_a; a <= P.window_a; ++a) {
      for (std::int64_t x : xs_wide) wide.push_back({a, x});
      for (std::int64_t x : xs_narrow) narrow.push_back({a, x});
    }
    for (std::int64_t x : xs_wide) s_wide.push_back({0, x});
    for (std::int64_t x : xs_narrow) s_narrow.push_back({0, x});

    for (const Element& u : wide) {
      for (const Element& v : wide) {
        const Element uv = mul(P, u, v);
        expect(mul(P, u, ldiv(P, u, v)) == v, [&] { return "u*(u\\w) != w for " + pair(u, v); });
        expect(mul(P, rdiv(P, v, u), u) == v, [&] { return "(w/v)*v != w for " + pair(v, u); });
        expect(ldiv(P, u, uv) == v && rdiv(P, uv, v) == u, [&] { return "division not unique for " + pair(u, v); });
        expect(uv == mul(P, v, u), [&] { return "not commutative at " + pair(u, v); });
      }
    }
    for (const Element& s : s_wide) {
      for (const Element& t : s_wide) {
        expect(mul(P, s, t).a == 0 && ldiv(P, s, t).a == 0 && rdiv(P, s, t).a == 0, [&] { return "S not closed at " + pair(s, t); });
      }
    }
    // The class of u is {u.a} x Z, and equals uS and Su.
    for (const Element& u : wide) {
      for (const Element& s : s_wide) {
        expect(mul(P, u, s).a == u.a && mul(P, s, u).a == u.a, [&] { return "uS or Su leaves the class at " + pair(u, s); });
        const Element w{u.a, s.x};
        expect(ldiv(P, u, w).a == 0 && rdiv(P, w, u).a == 0, [&] { return "class not covered by uS, Su at " + pair(u, w); });
      }
    }
    for (const Element& x : narrow) {
      for (const Element& y : narrow) {
        for (const Element& s : s_narrow) {
          expect(standard_inner(P, InnerKind::LL, x, y, s).a == 0, [&] { return "LL image leaves S at " + pair(x, y); });
          expect(standard_inner(P, InnerKind::RR, x, y, s).a == 0, [&] { return "RR image leaves S at " + pair(x, y); });
        }
      }
      for (const Element& s : s_wide) {
        expect(standard_inner(P, InnerKind::TR, x, {0, 0}, s).a == 0, [&] { return "TR image leaves S at " + pair(x, s); });
      }
    }
    audit_solution_sets();
    return report_;
  }

 private:
  static std::string pair(Element u, Element v) {
    return format_element(u) + ", " + format_element(v);
  }

  // For p | c and p not dividing a, the set {cp - a + p(a1 + k + 1) : 0 <= k < p}
  // consists of solutions of a (+) b = c with pairwise distinct pi-indices,
  // and contains the partner chosen by the division algorithm.
  void audit_solution_sets() {
    const std::int64_t p = params_.p;
    for (std::int64_t a = -params_.window_a; a <= params_.window_a; ++a) {
      if (floor_mod(a, p) == 0) continue;
      for (std::int64_t c = -params_.window_a; c <= params_.window_a; ++c) {
        if (floor_mod(c, p) != 0) continue;
        const std::int64_t a1 = floor_mod(floor_div(a, p), p);
        std::vector<std::int64_t> set, indices;
        for (std::int64_t k = 0; k < p; ++k) {
          const std::int64_t b = c * p - a + p * (a1 + k + 1);
          set.push_back(b);
          indices.push_back(floor_mod((a + b - p) / p, p));
          expect(oplus(p, a, b) == c, [&] { return "parametrized solution fails (+) at a=" +
                                          std::to_string(a) + " c=" + std::to_string(c); });
        }
        std::sort(indices.begin(), indices.end());
        expect(std::adjacent_find(indices.begin(), indices.end()) == indices.end(), [&] { return "pi-indices repeat at a=" + std::to_string(a) + " c=" + std::to_string(c); });
        for (std::int64_t i = 0; i < p; ++i) {
          const std::int64_t b = ldiv(params_, {a, 0}, {c, i}).a;
          expect(std::find(set.begin(), set.end(), b) != set.end(), [&] { return "division partner outside the parametrized set at a=" + std::to_string(a); });
        }
      }
    }
  }

  const Params& params_;
  AuditReport report_;
};

}  // namespace

AuditReport window_audit(const Params& params) {
  validate(params);
  return Auditor(params).run();
}

Element parse_element(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const auto fail = [&] {
    return LoopError(ErrorKind::Parse, "expected (a,x), got '" + std::string(text) + "'");
  };
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw fail();
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos) throw fail();
  Element e;
  const char* b1 = s.data() + 1;
  const char* e1 = s.data() + comma;
  const char* b2 = s.data() + comma + 1;
  const char* e2 = s.data() + s.size() - 1;
  auto r1 = std::from_chars(b1, e1, e.a);
  auto r2 = std::from_chars(b2, e2, e.x);
  if (r1.ec != std::errc{} || r1.ptr != e1 || r2.ec != std::errc{} || r2.ptr != e2) throw fail();
  return e;
}

std::string format_element(Element e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.x) + ")";
}

}  // namespace loops::bk
