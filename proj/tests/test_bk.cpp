#include <doctest.h>

#include "loops/bk_construction.hpp"
#include "support/errors.hpp"

using namespace loops;
using namespace loops::bk;
using testing::error_kind;

namespace {

Params P(std::int64_t p) {
  Params params;
  params.p = p;
  params.window_a = p * p * p;
  params.window_x = 100;
  return params;
}

}  // namespace

TEST_SUITE("bk") {

TEST_CASE("floor arithmetic") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-8, 4) == -2);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(7, 3) == 1);
}

TEST_CASE("perturbed addition") {
  CHECK(oplus(2, 0, 5) == 5);
  CHECK(oplus(2, 1, 1) == 0);
  CHECK(oplus(2, 3, 1) == 0);
  CHECK(oplus(2, 2, 2) == 4);
  CHECK(oplus(3, 4, 5) == 3 * (0 + 0));
  CHECK(oplus(3, 10, 8) == 3 * (1 + 0));
  CHECK(oplus(3, -1, 1) == 3 * (-1 + 0));
  // Commutative, not cancellative.
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b) CHECK(oplus(5, a, b) == oplus(5, b, a));
}

TEST_CASE("multiplication examples") {
  const Params p2 = P(2);
  CHECK(mul(p2, {0, 3}, {0, 4}) == Element{0, 7});
  CHECK(mul(p2, {1, 3}, {1, 4}) == Element{0, 14});
  CHECK(mul(p2, {1, 0}, {3, 0}) == Element{0, 1});
  CHECK(mul(p2, {0, 0}, {5, -3}) == Element{5, -3});
  CHECK(mul(p2, {5, -3}, {0, 0}) == Element{5, -3});
}

TEST_CASE("divisions") {
  const Params p2 = P(2);
  CHECK(ldiv(p2, {0, 3}, {0, 10}) == Element{0, 7});
  CHECK(ldiv(p2, {1, 3}, {0, 14}) == Element{1, 4});
  CHECK(rdiv(p2, {0, 1}, {3, 0}) == Element{1, 0});
  for (std::int64_t p : {2, 3, 5}) {
    const Params params = P(p);
    for (std::int64_t a = -9; a <= 9; ++a) {
      for (std::int64_t b = -9; b <= 9; ++b) {
        for (std::int64_t x : {-7, 0, 3}) {
          const Element u{a, x}, v{b, -x + 1};
          const Element w = mul(params, u, v);
          CHECK(ldiv(params, u, w) == v);
          CHECK(rdiv(params, w, v) == u);
        }
      }
    }
  }
}

TEST_CASE("standard inner mappings") {
  const Params p2 = P(2);
  for (InnerKind k : {InnerKind::LL, InnerKind::RR, InnerKind::TR})
    CHECK(standard_inner(p2, k, {3, 1}, {-2, 5}, {0, 0}) == Element{0, 0});
  for (std::int64_t t = -5; t <= 5; ++t)
    CHECK(standard_inner(p2, InnerKind::LL, {1, 0}, {1, 0}, {0, t}) == Element{0, 2 * t});
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t t = -3; t <= 3; ++t)
      CHECK(standard_inner(p2, InnerKind::TR, {a, 2}, {0, 0}, {0, t}).a == 0);
}

TEST_CASE("non-normality witness for p = 2") {
  const Witness w = nonnormal_witness(P(2));
  CHECK(w.x == Element{1, 0});
  CHECK(w.y == Element{1, 0});
  CHECK(w.s0 == Element{0, 1});
  CHECK(w.preimage == Element{2, 0});
  // Replay: phi = L_{xy}^-1 L_x L_y with xy = (0,0).
  const Params p2 = P(2);
  CHECK(mul(p2, w.x, w.y) == Element{0, 0});
  CHECK(mul(p2, {1, 0}, {2, 0}) == Element{3, 0});
  CHECK(mul(p2, {1, 0}, {3, 0}) == Element{0, 1});
  CHECK(standard_inner(p2, InnerKind::LL, w.x, w.y, w.preimage) == w.s0);
  // (0,2) is the image of (0,1), so it is not a witness.
  CHECK(standard_inner(p2, InnerKind::LL, w.x, w.y, {0, 1}) == Element{0, 2});
}

TEST_CASE("witnesses for p = 3 and 5") {
  for (std::int64_t p : {3, 5}) {
    const Params params = P(p);
    const Witness w = nonnormal_witness(params);
    CHECK(w.s0.a == 0);
    CHECK(w.preimage.a != 0);
    CHECK(standard_inner(params, InnerKind::LL, w.x, w.y, w.preimage) == w.s0);
  }
}

TEST_CASE("window audits are clean") {
  for (std::int64_t p : {2, 3}) {
    const AuditReport r = window_audit(P(p));
    CHECK(r.checks > 10000);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("parameters and element syntax") {
  Params bad;
  bad.p = 4;
  CHECK(error_kind([&] { validate(bad); }) == ErrorKind::InvalidSpec);
  bad.p = 3;
  bad.window_x = 0;
  CHECK(error_kind([&] { validate(bad); }) == ErrorKind::InvalidSpec);
  CHECK(parse_element("(1,3)") == Element{1, 3});
  CHECK(parse_element(" ( -2 , 14 ) ") == Element{-2, 14});
  CHECK(error_kind([] { parse_element("1,3"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_element("(1;3)"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_element("(1,3)x"); }) == ErrorKind::Parse);
  CHECK(format_element({-1, 7}) == "(-1,7)");
}

}  // TEST_SUITE
