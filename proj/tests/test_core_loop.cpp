#include <doctest.h>

#include "loops/error.hpp"
#include "loops/loop_table.hpp"
#include "loops/varieties.hpp"

#include "support/corpus.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace loops;

namespace {

using testing::error_kind;

Element E(int x) { return static_cast<Element>(x); }

}  // namespace

TEST_SUITE("core_loop") {

TEST_CASE("validate accepts Z2 and rejects broken tables") {
  const LoopTable z2 = LoopTable::validate(2, {{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.mul(1, 1) == 0);

  CHECK(error_kind([] { LoopTable::validate(2, {{0, 1}, {1, 1}}); }) == ErrorKind::NotLatin);
  // Z3 with the identity at element 1.
  CHECK(error_kind([] { LoopTable::validate(3, {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}); }) ==
        ErrorKind::NoIdentity);
  CHECK(error_kind([] { LoopTable::validate(3, {{0, 1}, {1, 0}}); }) == ErrorKind::BadDimensions);
  CHECK(error_kind([] { LoopTable::validate(2, {{0, 1}, {1, 0, 1}}); }) == ErrorKind::BadDimensions);
  CHECK(error_kind([] { LoopTable::validate(2, {{0, 1}, {1, 2}}); }) == ErrorKind::NotLatin);
}

TEST_CASE("NotLatin reports the offending line") {
  try {
    LoopTable::validate(4, {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 3, 1}, {3, 0, 1, 2}});
    FAIL("accepted");
  } catch (const LoopError& e) {
    CHECK(e.kind() == ErrorKind::NotLatin);
    REQUIRE(e.detail());
    CHECK(*e.detail() == 2);
  }
}

TEST_CASE("Z5 arithmetic and inverses") {
  const LoopTable z5 = cyclic_group(5);
  CHECK(z5.mul(2, 4) == 1);
  CHECK(z5.ldiv(2, 1) == 4);
  CHECK(z5.rdiv(1, 4) == 2);
  const LoopTable z4 = cyclic_group(4);
  CHECK(z4.left_inv(1) == 3);
  for (int x = 0; x < 4; ++x) CHECK(z4.left_inv(E(x)) == z4.right_inv(E(x)));
}

TEST_CASE("division round trips on every corpus loop up to order 5") {
  for (const LoopTable& q : testing::corpus_up_to(5)) {
    const int n = static_cast<int>(q.order());
    for (int x = 0; x < n; ++x) {
      CHECK(q.ldiv(0, E(x)) == x);
      CHECK(q.mul(q.left_inv(E(x)), E(x)) == 0);
      CHECK(q.mul(E(x), q.right_inv(E(x))) == 0);
      for (int y = 0; y < n; ++y) {
        CHECK(q.mul(E(x), q.ldiv(E(x), E(y))) == y);
        CHECK(q.ldiv(E(x), q.mul(E(x), E(y))) == y);
        CHECK(q.mul(q.rdiv(E(y), E(x)), E(x)) == y);
        CHECK(q.rdiv(q.mul(E(y), E(x)), E(x)) == y);
      }
    }
  }
}

TEST_CASE("some order-5 loop has distinct left and right inverses") {
  bool found = false;
  for (const LoopTable& q : testing::corpus(5)) {
    for (int x = 0; x < 5; ++x) found = found || q.left_inv(E(x)) != q.right_inv(E(x));
  }
  CHECK(found);
}

TEST_CASE("translations") {
  const LoopTable& q = testing::nonassociative_order5();
  CHECK(left_translation(q, 0).is_identity());
  CHECK(right_translation(q, 0).is_identity());
  bool nontrivial_t = false;
  for (int x = 0; x < 5; ++x) {
    const Perm l = left_translation(q, E(x)), r = right_translation(q, E(x));
    const Perm t = middle_translation(q, E(x));
    CHECK(apply(l, 0) == x);
    CHECK(t == invert(r) * l);
    CHECK(t(0) == 0);
    nontrivial_t = nontrivial_t || !t.is_identity();
    for (int y = 0; y < 5; ++y) {
      CHECK(l(E(y)) == q.mul(E(x), E(y)));
      CHECK(r(E(y)) == q.mul(E(y), E(x)));
    }
  }
  CHECK(nontrivial_t);
  const LoopTable z6 = cyclic_group(6);
  for (int x = 0; x < 6; ++x) CHECK(middle_translation(z6, E(x)).is_identity());
}

TEST_CASE("opposite") {
  const LoopTable z2 = cyclic_group(2);
  CHECK(opposite(z2) == z2);
  const LoopTable s3 = oracle::symmetric_group_3();
  const LoopTable op = opposite(s3);
  CHECK_FALSE(op == s3);
  CHECK(isomorphic(op, s3).has_value());
  for (const LoopTable& q : testing::corpus(5)) CHECK(opposite(opposite(q)) == q);
}

TEST_CASE("direct products") {
  const LoopTable k4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(k4.order() == 4);
  for (int x = 0; x < 4; ++x) CHECK(k4.mul(E(x), E(x)) == 0);
  CHECK_FALSE(isomorphic(k4, cyclic_group(4)).has_value());
  const LoopTable& q = testing::nonassociative_order5();
  CHECK(direct_product(q, trivial_loop()) == q);
  CHECK(error_kind([] { direct_product(cyclic_group(12), cyclic_group(11)); }) == ErrorKind::Overflow);
}

TEST_CASE("CC(6) x Moufang(12) is generalized Moufang but neither CC nor Moufang") {
  const LoopTable cc6 = testing::data_loop("cc6.loop");
  const LoopTable m12 = testing::data_loop("moufang12.loop");
  const LoopTable p = direct_product(cc6, m12);
  CHECK(p.order() == 72);
  CHECK(check_variety(p, "gen_moufang"));
  CHECK_FALSE(check_variety(p, "cc"));
  CHECK_FALSE(check_variety(p, "moufang"));
}

TEST_CASE("principal isotopes") {
  const LoopTable& q = testing::nonassociative_order5();
  CHECK(principal_isotope(q, 0, 0) == q);
  const LoopTable s3 = oracle::symmetric_group_3();
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) CHECK(isomorphic(principal_isotope(s3, E(a), E(b)), s3).has_value());
  }
  // x o y = (x/b)(a\y), identity ab moved to 0.
  const int a = 2, b = 3;
  const LoopTable iso = principal_isotope(q, E(a), E(b));
  const int e = q.mul(E(a), E(b));
  auto rename = [&](int x) { return x == e ? 0 : x == 0 ? e : x; };
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      CHECK(iso.mul(E(rename(x)), E(rename(y))) ==
            rename(q.mul(q.rdiv(E(x), E(b)), q.ldiv(E(a), E(y)))));
    }
  }
  bool some_nonisomorphic = false;
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      some_nonisomorphic = some_nonisomorphic || !isomorphic(principal_isotope(q, E(x), E(y)), q).has_value();
    }
  }
  CHECK(some_nonisomorphic);
}

TEST_CASE("isomorphism agrees with the brute-force oracle") {
  CHECK_FALSE(isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))).has_value());
  CHECK(error_kind([] { isomorphic(cyclic_group(3), cyclic_group(4)); }) == ErrorKind::OrderMismatch);
  const auto squares = oracle::reduced_latin_squares(4);
  REQUIRE(squares.size() == 4);
  CHECK(oracle::classify(squares).size() == 2);
  for (std::size_t n = 4; n <= 5; ++n) {
    const auto all = oracle::reduced_latin_squares(n);
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 5) {
        const auto f = isomorphic(all[i], all[j]);
        CHECK(f.has_value() == oracle::brute_isomorphic(all[i], all[j]));
        if (f) {
          CHECK(relabel(all[i], *f) == all[j]);
        }
      }
    }
  }
}

TEST_CASE("relabelled loops are isomorphic") {
  const LoopTable m12 = testing::data_loop("moufang12.loop");
  std::vector<Element> img(12);
  for (int i = 0; i < 12; ++i) img[i] = E(i == 0 ? 0 : 1 + (i * 5) % 11);
  const Perm sigma(img);
  const LoopTable r = relabel(m12, sigma);
  const auto f = isomorphic(m12, r);
  REQUIRE(f);
  CHECK(relabel(m12, *f) == r);
  CHECK(isomorphic(r, m12).has_value());
}

}  // TEST_SUITE
