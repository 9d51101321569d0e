#include <doctest.h>

#include <set>

#include "loops/structure.hpp"
#include "loops/theorems.hpp"
#include "loops/varieties.hpp"
#include "support/corpus.hpp"

using namespace loops;

TEST_SUITE("theorems") {

TEST_CASE("dihedral groups") {
  const LoopTable d8 = dihedral_group(4);
  CHECK(d8.order() == 8);
  CHECK(check_variety(d8, "associative"));
  CHECK_FALSE(check_variety(d8, "commutative"));
  CHECK(center(d8).size() == 2);
  // r has order m, s is an involution.
  CHECK(d8.mul(4, 4) == 0);
  Element r = 1;
  for (int k = 1; k < 4; ++k) r = d8.mul(r, 1);
  CHECK(r == 0);
}

TEST_CASE("check ids are unique and match the report") {
  const auto ids = theorem_check_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  const TheoremReport r = verify_theorems(cyclic_group(2));
  REQUIRE(r.checks.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(r.checks[i].id == ids[i]);
}

TEST_CASE("Z2 passes everything") {
  const TheoremReport r = verify_theorems(cyclic_group(2));
  CHECK_FALSE(r.any_fail());
  CHECK(r.count(CheckStatus::Pass) > 0);
  CHECK(r.count(CheckStatus::Pass) + r.count(CheckStatus::Fail) +
            r.count(CheckStatus::NotApplicable) ==
        r.checks.size());
}

TEST_CASE("no failures on any loop of order at most 6") {
  std::size_t pass = 0;
  for (const LoopTable& q : testing::corpus_up_to(6)) {
    const TheoremReport r = verify_theorems(q);
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CAPTURE(c.note);
      CHECK(c.status != CheckStatus::Fail);
    }
    pass += r.count(CheckStatus::Pass);
  }
  CHECK(pass > 1000);
}

TEST_CASE("cc6 exercises the Osborn checks") {
  const TheoremReport r = verify_theorems(testing::data_loop("cc6.loop"));
  CHECK_FALSE(r.any_fail());
  for (const auto& c : r.checks) {
    if (c.id == "cc_quotient_abelian" || c.id == "osborn_nuclei" || c.id == "cc_g_loop" ||
        c.id == "osborn_equivalences")
      CHECK(c.status == CheckStatus::Pass);
  }
}

TEST_CASE("moufang12 passes") {
  const TheoremReport r = verify_theorems(testing::data_loop("moufang12.loop"));
  CHECK_FALSE(r.any_fail());
}

TEST_CASE("group cap turns checks into N/A") {
  VerifyOptions opt;
  opt.cap = 4;
  const TheoremReport r = verify_theorems(testing::data_loop("moufang12.loop"), opt);
  CHECK_FALSE(r.any_fail());
  bool capped = false;
  for (const auto& c : r.checks)
    capped = capped || (c.status == CheckStatus::NotApplicable && !c.note.empty());
  CHECK(capped);
}

TEST_CASE("report format") {
  const std::string text = format_report("z2", verify_theorems(cyclic_group(2)));
  CHECK(text.rfind("z2 ", 0) == 0);
  CHECK(text.find(" FAIL") == std::string::npos);
  CHECK(text.find("z2 lc_equivalences PASS") != std::string::npos);
}

}  // TEST_SUITE

TEST_SUITE("theorems") {

TEST_CASE("order-16 proper Osborn loops") {
  std::set<std::string> notes;
  for (const char* name : {"osborn16_a.loop", "osborn16_b.loop"}) {
    const LoopTable q = testing::data_loop(name);
    CHECK(check_variety(q, "osborn"));
    CHECK_FALSE(check_variety(q, "cc"));
    CHECK_FALSE(check_variety(q, "moufang"));
    CHECK(nilpotency_class(q) == std::optional<std::size_t>(3));
    const TheoremReport r = verify_theorems(q);
    CHECK_FALSE(r.any_fail());
    for (const auto& c : r.checks) {
      if (c.id != "proper_osborn_16_profile") continue;
      CHECK(c.status == CheckStatus::Pass);
      notes.insert(c.note);
    }
  }
  CHECK(notes == std::set<std::string>{"L^4=R^4=id: yes", "L^4=R^4=id: no"});
  CHECK_FALSE(isomorphic(testing::data_loop("osborn16_a.loop"), testing::data_loop("osborn16_b.loop"))
                  .has_value());
}

}  // TEST_SUITE
