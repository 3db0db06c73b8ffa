#include <doctest.h>

#include <sstream>

#include "pathsys/builder.hpp"
#include "pathsys/io.hpp"

using namespace pathsys;

TEST_CASE("system files round-trip for every constructed order up to 200") {
  for (int n = 4; n <= 200; ++n) {
    if (!is_admissible(n, 4)) continue;
    auto built = build_2chromatic(n);
    std::stringstream buffer;
    write_system_file(buffer, built.system);
    PathSystem reread = to_system(read_system_file(buffer));
    REQUIRE(reread.order() == built.system.order());
    REQUIRE(reread.path_order() == built.system.path_order());
    REQUIRE(reread.blocks() == built.system.blocks());

    std::stringstream colours;
    write_colouring_file(colours, built.colouring);
    Colouring recoloured = to_colouring(read_colouring_file(colours));
    REQUIRE(recoloured.k() == built.colouring.k());
    for (Vertex v : built.system.vertices()) {
      REQUIRE(recoloured.at(v) == built.colouring.at(v));
    }
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::stringstream in(
      "# a P4 system of order 4\n"
      "PATHSYS 1 4 4 2\n"
      "\n"
      "3 1 2 4\n"
      "# reversal of the other block\n"
      "1 4 3 2\n");
  SystemFileData data = read_system_file(in);
  CHECK(data.n == 4);
  CHECK(data.m == 4);
  CHECK(data.blocks.size() == 2);
}

TEST_CASE("malformed system files raise parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_system_file(in), Error);
    std::stringstream again(text);
    try {
      read_system_file(again);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  };
  expect_parse_error("");
  expect_parse_error("NOTPATHSYS 1 4 4 2\n3 1 2 4\n1 4 3 2\n");
  expect_parse_error("PATHSYS 2 4 4 2\n3 1 2 4\n1 4 3 2\n");
  expect_parse_error("PATHSYS 1 4 4 2\n3 1 2 4\n");                // truncated
  expect_parse_error("PATHSYS 1 4 4 1\n3 1 2\n");                  // short line
  expect_parse_error("PATHSYS 1 4 4 1\n3 1 2 9\n");                // out of range
  expect_parse_error("PATHSYS 1 4 4 1\n3 1 2 4 junk\n");           // trailing token
  expect_parse_error("PATHSYS 1 4 4 1\n1 2 2 4\n");                // repeated vertex
}

TEST_CASE("malformed colouring files raise parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_colouring_file(in), Error);
  };
  expect_parse_error("");
  expect_parse_error("COLOURING 2 2\n1 0\n");           // missing vertex
  expect_parse_error("COLOURING 2 2\n1 0\n1 1\n");      // repeated vertex
  expect_parse_error("COLOURING 2 2\n1 0\n2 5\n");      // class out of range
  expect_parse_error("COLOURING 2 2\n1 0\n3 1\n");      // vertex out of range
}

TEST_CASE("to_system enforces the system invariants") {
  SystemFileData data;
  data.n = 4;
  data.m = 4;
  data.blocks = {PathBlock{3, 1, 2, 4}, PathBlock{4, 2, 1, 3}};  // same block twice
  CHECK_THROWS_AS(to_system(data), Error);
}
