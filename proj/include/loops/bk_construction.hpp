#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loops::bk {

// An infinite loop M on Z x Z built from a prime p. The first coordinate
// combines by a perturbed addition (oplus below); the second by integer
// addition, re-encoded by pi_i(w) = p*w + i whenever oplus takes its special
// branch. S = {0} x Z is a subloop that is invariant under every standard
// generator of Inn(M) but is not normal.
struct Params {
  std::int64_t p = 2;
  // Audit window: |a| <= window_a, |x| <= window_x.
  std::int64_t window_a = 8;
  std::int64_t window_x = 100;
};

// Throws InvalidSpec unless p is a prime and both bounds are positive.
void validate(const Params& params);

struct Element {
  std::int64_t a = 0;
  std::int64_t x = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

// Floor division and the matching non-negative remainder.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

// p(floor(a/p^2) + floor(b/p^2)) when p | a+b and p does not divide a;
// a+b otherwise.
std::int64_t oplus(std::int64_t p, std::int64_t a, std::int64_t b);

Element mul(const Params& params, Element u, Element v);
// The unique v with u*v = w. Throws Inconsistent if the result does not
// multiply back, which would be a bug.
Element ldiv(const Params& params, Element u, Element w);
// The unique u with u*v = w.
Element rdiv(const Params& params, Element w, Element v);

enum class InnerKind { LL, RR, TR };

// LL: L_{xy}^-1 L_x L_y, RR: R_{yx}^-1 R_x R_y, TR: L_x^-1 R_x (y unused),
// applied to s.
Element standard_inner(const Params& params, InnerKind kind, Element x, Element y,
                       Element s);

struct Witness {
  Element x;
  Element y;
  Element s0;
  // phi^-1(s0) for phi = L_{xy}^-1 L_x L_y. Its first coordinate is nonzero,
  // so s0 is not in phi(S).
  Element preimage;
};

// Deterministic scan: s0 = (0, t) for t = 1, -1, 2, -2, ... up to the
// window, then x, then y, each over the window ordered by |a| (positive
// before negative), then by |x| the same way. Throws WitnessNotFoundInWindow.
Witness nonnormal_witness(const Params& params);

struct AuditReport {
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
};

// Division round trips, closure of S, [u] = uS = Su, standard generator
// images of S, commutativity and the parametrized solution sets of oplus,
// over a sample of the window: every first coordinate and a spread of
// second coordinates including 0, +-1 and +-window_x.
AuditReport window_audit(const Params& params);

// "(a,x)" with optional spaces. Throws Parse.
Element parse_element(std::string_view text);
std::string format_element(Element e);

}  // namespace loops::bk
