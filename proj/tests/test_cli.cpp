#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "support/corpus.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = loops::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors") {
  CHECK(run({}).code == loops::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == loops::cli::kExitUsage);
  CHECK(run({"search"}).code == loops::cli::kExitUsage);
  CHECK(run({"search", "--order", "5", "--mode", "sideways"}).code == loops::cli::kExitUsage);
  CHECK(run({"--help"}).code == loops::cli::kExitOk);
}

TEST_CASE("list varieties") {
  const Run r = run({"--list-varieties"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "moufang: "));
  CHECK(has(r.out, "associative (assoc, group)"));
}

TEST_CASE("check") {
  const Run z4 = run({"check", testing::data_path("z4.loop")});
  CHECK(z4.code == 0);
  CHECK(has(z4.out, "(N = Q)"));
  CHECK(has(z4.out, "  associative yes"));
  const Run cc = run({"check", testing::data_path("cc6.loop"), "--g-loop"});
  CHECK(cc.code == 0);
  CHECK(has(cc.out, "  cc yes"));
  CHECK(has(cc.out, "  moufang no"));
  CHECK(has(cc.out, "  osborn yes"));
  CHECK(has(cc.out, "abelian group yes"));
  CHECK(has(cc.out, "g-loop: yes"));
  const Run bad = run({"check", testing::data_path("corrupt.loop")});
  CHECK(bad.code == loops::cli::kExitUsage);
  CHECK(has(bad.err, "NotLatin"));
  CHECK(has(bad.err, "row 2"));
}

TEST_CASE("search") {
  const Run iso = run({"search", "--order", "5", "--mode", "count-iso"});
  CHECK(iso.code == 0);
  CHECK(has(iso.out, "found=6"));
  const Run osb = run({"search", "--order", "6", "--require", "osborn", "--forbid", "cc,moufang"});
  CHECK(osb.code == 0);
  CHECK(has(osb.out, "found=0"));
  const auto dir = std::filesystem::temp_directory_path() / "loops_cli_search";
  std::filesystem::remove_all(dir);
  const Run first = run({"search", "--order", "6", "--require", "cc", "--forbid", "assoc",
                         "--mode", "first", "--out", dir.string()});
  CHECK(first.code == 0);
  CHECK(has(first.out, "found=1"));
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    const auto q = loops::read_loop_file(e.path().string());
    CHECK(loops::check_variety(q, "cc"));
  }
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
  const Run budget = run({"search", "--order", "6", "--budget-nodes", "50"});
  CHECK(budget.code == loops::cli::kExitBudget);
  const Run unknown = run({"search", "--order", "4", "--require", "nope"});
  CHECK(unknown.code == loops::cli::kExitUsage);
}

TEST_CASE("verify") {
  const Run corpus = run({"verify", "--corpus", "4"});
  CHECK(corpus.code == 0);
  CHECK(has(corpus.out, "fail=0"));
  CHECK_FALSE(has(corpus.out, " FAIL"));
  const Run z2 = run({"verify", testing::data_path("z2.loop")});
  CHECK(z2.code == 0);
  CHECK(has(z2.out, "z2 lc_equivalences PASS"));
}

TEST_CASE("construct") {
  CHECK(run({"construct", "--p", "2", "mul", "(1,3)", "(1,4)"}).out == "(0,14)\n");
  CHECK(run({"construct", "--p", "2", "ldiv", "(1,3)", "(0,14)"}).out == "(1,4)\n");
  CHECK(run({"construct", "--p", "2", "rdiv", "(0,1)", "(3,0)"}).out == "(1,0)\n");
  CHECK(run({"construct", "--p", "2", "witness"}).out ==
        "x=(1,0) y=(1,0) s0=(0,1) preimage=(2,0)\n");
  const Run audit = run({"construct", "--p", "3", "audit"});
  CHECK(audit.code == 0);
  CHECK(audit.out.rfind("0 violations in ", 0) == 0);
  CHECK(run({"construct", "--p", "4", "witness"}).code == loops::cli::kExitUsage);
  CHECK(run({"construct", "--p", "2", "mul", "(1,3)"}).code == loops::cli::kExitUsage);
  CHECK(run({"construct", "--p", "2", "mul", "1,3", "(1,4)"}).code == loops::cli::kExitUsage);
}

TEST_CASE("isotopes and quotients") {
  const Run iso = run({"isotopes", testing::data_path("cc6.loop")});
  CHECK(iso.code == 0);
  CHECK(has(iso.out, "isomorphic principal isotopes: 36/36"));
  const Run quot = run({"quotient", testing::data_path("cc6.loop")});
  CHECK(quot.code == 0);
  CHECK(has(quot.out, "\n2\n0 1\n1 0\n"));
  const Run bad = run({"quotient", testing::data_path("moufang12.loop"), "--members", "0,1,2"});
  CHECK(bad.code == loops::cli::kExitUsage);
}

}  // TEST_SUITE
