#include <doctest.h>

#include "loops/perm_group.hpp"
#include "loops/structure.hpp"
#include "loops/theorems.hpp"
#include "loops/varieties.hpp"
#include "support/corpus.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace loops;
using testing::error_kind;

namespace {

// Direct definitions, written out again so they do not depend on structure.cpp.
bool in_left(const LoopTable& q, Element a) {
  const auto n = static_cast<Element>(q.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (q.mul(a, q.mul(x, y)) != q.mul(q.mul(a, x), y)) return false;
  return true;
}

bool in_right(const LoopTable& q, Element a) {
  const auto n = static_cast<Element>(q.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (q.mul(q.mul(x, y), a) != q.mul(x, q.mul(y, a))) return false;
  return true;
}

SubloopSet members_where(const LoopTable& q, bool (*pred)(const LoopTable&, Element)) {
  SubloopSet s(q.order());
  for (Element a = 0; a < q.order(); ++a)
    if (pred(q, a)) s.insert(a);
  return s;
}

std::vector<Perm> middle_commutators(const LoopTable& q) {
  std::vector<Perm> out;
  for (Element x = 0; x < q.order(); ++x)
    for (Element y = 0; y < q.order(); ++y)
      out.push_back(commutator(left_translation(q, x), right_translation(q, y)));
  return out;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("nuclei of groups and of cc6") {
  const LoopTable z4 = cyclic_group(4);
  CHECK(nucleus(z4).is_all());
  CHECK(center(z4).is_all());
  const LoopTable s3 = oracle::symmetric_group_3();
  CHECK(nucleus(s3).is_all());
  CHECK(center(s3).members() == std::vector<Element>{0});
  const LoopTable cc6 = testing::data_loop("cc6.loop");
  CHECK(nucleus(cc6).members() == std::vector<Element>{0, 3, 5});
  CHECK(left_nucleus(cc6) == members_where(cc6, in_left));
  CHECK(right_nucleus(cc6) == members_where(cc6, in_right));
}

TEST_CASE("nuclei agree with the direct definitions on the corpus") {
  for (const LoopTable& q : testing::corpus_up_to(6)) {
    CHECK(left_nucleus(q) == members_where(q, in_left));
    CHECK(right_nucleus(q) == members_where(q, in_right));
    const SubloopSet n = nucleus(q);
    CHECK(is_subloop(q, n));
    CHECK(n.subset_of(middle_nucleus(q)));
    CHECK(center(q).subset_of(n));
  }
}

TEST_CASE("nuclei are the fixed points of the inner mapping groups") {
  bool some_left_right_differ = false;
  for (const LoopTable& q : testing::corpus_up_to(6)) {
    // L_{xy}^-1 L_x L_y fixes a exactly when x(ya) = (xy)a.
    CHECK(fixed_points(inn_left(q)) == right_nucleus(q));
    CHECK(fixed_points(inn_right(q)) == left_nucleus(q));
    CHECK(fixed_points(q.order(), middle_commutators(q)) == middle_nucleus(q));
    some_left_right_differ = some_left_right_differ || left_nucleus(q) != right_nucleus(q);
  }
  // So the pairing left <-> inn_left would be wrong somewhere.
  CHECK(some_left_right_differ);
}

TEST_CASE("generated subloops") {
  const LoopTable z6 = cyclic_group(6);
  CHECK(subloop_generated(z6, {2}).members() == std::vector<Element>{0, 2, 4});
  CHECK(subloop_generated(z6, {2, 3}).is_all());
  CHECK(subloop_generated(z6, {}).members() == std::vector<Element>{0});
  CHECK(is_subloop(z6, SubloopSet(6, {0, 3})));
  CHECK_FALSE(is_subloop(z6, SubloopSet(6, {0, 1})));
  const LoopTable sub = subloop_table(z6, SubloopSet(6, {0, 2, 4}));
  CHECK(sub == cyclic_group(3));
}

TEST_CASE("normal subloops") {
  const LoopTable s3 = oracle::symmetric_group_3();
  const SubloopSet a3 = subloop_generated(s3, {3});
  REQUIRE(a3.size() == 3);
  CHECK(is_normal_subloop(s3, a3));
  CHECK(standard_generator_invariant(s3, a3));
  const SubloopSet c2 = subloop_generated(s3, {1});
  REQUIRE(c2.size() == 2);
  CHECK_FALSE(is_normal_subloop(s3, c2));
  CHECK(error_kind([&] { is_normal_subloop(s3, SubloopSet(6, {0, 1, 2})); }) ==
        ErrorKind::NotASubloop);
}

TEST_CASE("normality agrees with standard generator invariance on the corpus") {
  for (const LoopTable& q : testing::corpus_up_to(6)) {
    for (Element g = 1; g < q.order(); ++g) {
      const SubloopSet s = subloop_generated(q, {g});
      CHECK(is_normal_subloop(q, s) == standard_generator_invariant(q, s));
    }
  }
}

TEST_CASE("quotients") {
  const LoopTable z6 = cyclic_group(6);
  const Quotient qt = quotient(z6, SubloopSet(6, {0, 3}));
  CHECK(qt.table == cyclic_group(3));
  CHECK(qt.representatives == std::vector<Element>{0, 1, 2});
  CHECK(qt.projection == std::vector<Element>{0, 1, 2, 0, 1, 2});
  const LoopTable s3 = oracle::symmetric_group_3();
  CHECK(error_kind([&] { quotient(s3, subloop_generated(s3, {1})); }) == ErrorKind::NotNormal);
  const LoopTable cc6 = testing::data_loop("cc6.loop");
  const Quotient qn = quotient(cc6, nucleus(cc6));
  CHECK(qn.table.order() == 2);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      CHECK(qn.table.mul(qn.projection[x], qn.projection[y]) == qn.projection[cc6.mul(x, y)]);
}

TEST_CASE("central series and nilpotency") {
  CHECK(nilpotency_class(cyclic_group(5)) == std::optional<std::size_t>(1));
  CHECK(nilpotency_class(trivial_loop()) == std::optional<std::size_t>(0));
  CHECK_FALSE(nilpotency_class(oracle::symmetric_group_3()).has_value());
  const LoopTable m12 = testing::data_loop("moufang12.loop");
  CHECK_FALSE(nilpotency_class(m12).has_value());
  const LoopTable k8 = direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(nilpotency_class(k8) == std::optional<std::size_t>(1));
  CHECK(nilpotency_class(dihedral_group(4)) == std::optional<std::size_t>(2));
  CHECK(nilpotency_class(dihedral_group(8)) == std::optional<std::size_t>(3));
  const auto series = upper_central_series(oracle::symmetric_group_3());
  CHECK(series.back().size() == 1);
}

}  // TEST_SUITE
