#include <doctest.h>

#include <sstream>

#include "mrc3/coloring.hpp"
#include "mrc3/io.hpp"
#include "test_util.hpp"

using namespace mrc3;
using namespace mrc3::testutil;

TEST_CASE("instance round-trip is byte-identical") {
  auto g = generate_equitable(8, 4);
  auto inst = make_instance(g, ReloadCostMatrix::uniform(2, 3));
  std::ostringstream first;
  write_instance(first, inst);
  std::istringstream back(first.str());
  auto parsed = parse_instance(back);
  std::ostringstream second;
  write_instance(second, parsed);
  CHECK(first.str() == second.str());
  CHECK(parsed.to_complete() == g);
}

TEST_CASE("parser accepts comments and rejects malformed input") {
  std::string good =
      "# demo instance\n"
      "mrc3 v1\n"
      "n 3 colors 2\n"
      "e 0 1 0\n"
      "e 0 2 1\n"
      "e 1 2 1  # last edge\n"
      "r 0 1 4\n";
  std::istringstream in(good);
  auto inst = parse_instance(in);
  CHECK(inst.n == 3);
  CHECK(inst.is_complete());
  CHECK(inst.costs.cost(0, 1) == 4);
  CHECK(inst.costs.cost(1, 0) == 4);
  CHECK(inst.edge_color(1, 2) == 1);

  auto expect_fail = [](const std::string& text) {
    std::istringstream s(text);
    CHECK_THROWS_AS(parse_instance(s), ParseError);
  };
  expect_fail("nope\n");
  expect_fail("mrc3 v1\nn 3 colors 2\ne 0 3 1\nr 0 1 1\n");
  expect_fail("mrc3 v1\nn 3 colors 2\ne 0 1 5\nr 0 1 1\n");
  expect_fail("mrc3 v1\nn 3 colors 2\ne 0 1 0\ne 1 0 1\nr 0 1 1\n");
  expect_fail("mrc3 v1\nn 3 colors 2\ne 0 1 0\n");                      // missing reload pair
  expect_fail("mrc3 v1\nn 3 colors 2\ne 0 1 0\nr 0 0 3\nr 0 1 1\n");    // nonzero diagonal
  expect_fail("mrc3 v1\nn 3 colors 2\ne 0 1 0\nr 0 1 1\nr 1 0 2\n");    // asymmetric
  expect_fail("mrc3 v1\nn 3 colors 2\nq 0 1 0\n");
}

TEST_CASE("asymmetric mode permits directed costs") {
  std::string text =
      "mrc3 v1\n"
      "n 3 colors 2\n"
      "e 0 1 0\ne 0 2 1\ne 1 2 1\n"
      "r 0 1 1\nr 1 0 2\n";
  std::istringstream strict(text);
  CHECK_THROWS_AS(parse_instance(strict), ParseError);
  std::istringstream relaxed(text);
  auto inst = parse_instance(relaxed, true);
  CHECK(inst.costs.cost(0, 1) == 1);
  CHECK(inst.costs.cost(1, 0) == 2);
  CHECK_FALSE(inst.costs.is_symmetric());
}

TEST_CASE("general instances parse with missing edges") {
  std::string text =
      "mrc3 v1\n"
      "n 4 colors 1\n"
      "e 0 1 0\ne 1 2 0\ne 2 3 0\n";
  std::istringstream in(text);
  auto inst = parse_instance(in);
  CHECK_FALSE(inst.is_complete());
  CHECK_THROWS_AS(inst.to_complete(), ParseError);
  auto general = inst.to_general();
  CHECK(general.graph.edge_count() == 3);
}

TEST_CASE("cover round-trip and canonicalization") {
  CycleCover cover{{{4, 3, 5}, {2, 1, 0}}};
  std::ostringstream out;
  write_cover(out, cover);
  CHECK(out.str() == "0 1 2\n3 4 5\n");
  std::istringstream in(out.str());
  auto parsed = parse_cover(in);
  CHECK(parsed == canonical(cover));

  std::istringstream bad("0 1 x\n");
  CHECK_THROWS_AS(parse_cover(bad), ParseError);
}
