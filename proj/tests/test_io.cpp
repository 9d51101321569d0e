#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "loops/loop_io.hpp"
#include "support/corpus.hpp"
#include "support/errors.hpp"

using namespace loops;
using testing::error_kind;

TEST_SUITE("io") {

TEST_CASE("format then parse is the identity") {
  for (const LoopTable& q : testing::corpus_up_to(5)) CHECK(parse_loop(format_loop(q)) == q);
  const LoopTable m12 = testing::data_loop("moufang12.loop");
  CHECK(parse_loop(format_loop(m12)) == m12);
}

TEST_CASE("format is one row per line") {
  CHECK(format_loop(cyclic_group(3)) == "3\n0 1 2\n1 2 0\n2 0 1\n");
}

TEST_CASE("comments and blank lines are ignored") {
  const LoopTable q = parse_loop("# Z2\n\n2   # order\n0 1\n\n1 0 # last\n");
  CHECK(q == cyclic_group(2));
}

TEST_CASE("malformed input") {
  CHECK(error_kind([] { parse_loop(""); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_loop("# nothing\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_loop("2 2\n0 1\n1 0\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_loop("2\n0 x\n1 0\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_loop("2\n0 1\n1 0\n0 1\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { parse_loop("3\n0 1 2\n1 2 0\n"); }) == ErrorKind::BadDimensions);
  CHECK(error_kind([] { parse_loop("2\n0 1 0\n1 0\n"); }) == ErrorKind::BadDimensions);
  CHECK(error_kind([] { parse_loop("0\n"); }) == ErrorKind::BadDimensions);
  CHECK(error_kind([] { parse_loop("2\n1 0\n0 1\n"); }) == ErrorKind::NoIdentity);
}

TEST_CASE("corrupt file names the row") {
  try {
    testing::data_loop("corrupt.loop");
    FAIL("accepted");
  } catch (const LoopError& e) {
    CHECK(e.kind() == ErrorKind::NotLatin);
    CHECK(e.detail() == std::optional<std::int64_t>(2));
  }
}

TEST_CASE("missing file") {
  CHECK(error_kind([] { read_loop_file("/nonexistent/x.loop"); }) == ErrorKind::Parse);
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "loops_io_roundtrip.loop";
  const LoopTable cc6 = testing::data_loop("cc6.loop");
  write_loop_file(path.string(), cc6);
  CHECK(read_loop_file(path.string()) == cc6);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
