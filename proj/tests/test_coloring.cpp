#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "mrc3/coloring.hpp"
#include "mrc3/rng.hpp"
#include "test_util.hpp"

using namespace mrc3;
using namespace mrc3::testutil;

TEST_CASE("classify: equitable, nearly equitable, neither") {
  // red 5-cycle with blue complement: every vertex sees 2 red, 2 blue
  CHECK(classify(red_five_cycle()) == ColoringClass::Equitable);
  CHECK(classify(ColoredCompleteGraph::monochromatic(5, kRed)) == ColoringClass::Neither);

  // K_7 never classifies Equitable, over many random colorings
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial)
    CHECK(classify(random_coloring(7, rng)) != ColoringClass::Equitable);

  auto three_colors = ColoredCompleteGraph::monochromatic(4, 0, 3);
  CHECK_THROWS_AS(classify(three_colors), std::invalid_argument);
}

TEST_CASE("equitable feasibility excludes exactly n = 4k+3") {
  CHECK_FALSE(equitable_feasible(3));
  CHECK(equitable_feasible(4));
  CHECK(equitable_feasible(5));
  CHECK(equitable_feasible(6));
  CHECK_FALSE(equitable_feasible(7));
  CHECK(equitable_feasible(8));
  CHECK_FALSE(equitable_feasible(11));
  CHECK(equitable_feasible(13));
  CHECK_THROWS_AS(equitable_feasible(2), std::invalid_argument);
}

TEST_CASE("generate_equitable certifies its output") {
  for (int n : {4, 5, 6, 8, 9, 12, 13, 16, 17, 21, 32, 33}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto g = generate_equitable(n, seed);
      CHECK(classify(g) == ColoringClass::Equitable);
    }
  }
  // per-vertex degree checks from the construction
  auto g5 = generate_equitable(5, 1);
  for (Vertex v = 0; v < 5; ++v) CHECK(g5.color_degree(v, kRed) == 2);
  auto g8 = generate_equitable(8, 1);
  for (Vertex v = 0; v < 8; ++v) {
    int r = g8.color_degree(v, kRed);
    CHECK((r == 3 || r == 4));
  }
  CHECK_THROWS_AS(generate_equitable(7, 0), InfeasibleError);
  // determinism per seed
  CHECK(generate_equitable(12, 42) == generate_equitable(12, 42));
  CHECK(generate_equitable(12, 42) != generate_equitable(12, 43));
}

TEST_CASE("generate_nearly_equitable honors feasibility and classification") {
  CHECK_THROWS_AS(generate_nearly_equitable(8, true, 0), InfeasibleError);
  CHECK_THROWS_AS(generate_nearly_equitable(10, true, 3), InfeasibleError);
  CHECK_THROWS_AS(generate_nearly_equitable(3, true, 0), InfeasibleError);

  for (int n : {5, 7, 9, 13, 15, 17, 21}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto g = generate_nearly_equitable(n, true, seed);
      CHECK(classify(g) == ColoringClass::NearlyEquitableOnly);
      CHECK(max_color_degree_gap(g) == 2);
    }
  }

  // n = 9 forced: some vertex with gap exactly 2, none above
  auto g9 = generate_nearly_equitable(9, true, 4);
  int worst = 0;
  for (Vertex v = 0; v < 9; ++v)
    worst = std::max(worst, std::abs(g9.color_degree(v, kRed) - g9.color_degree(v, kBlue)));
  CHECK(worst == 2);

  // unforced: equitable or nearly equitable, never Neither
  for (int n : {6, 9, 11, 13}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto g = generate_nearly_equitable(n, false, seed);
      CHECK(classify(g) != ColoringClass::Neither);
    }
  }
  CHECK(generate_nearly_equitable(13, true, 9) == generate_nearly_equitable(13, true, 9));
}

TEST_CASE("random_equitable_walk preserves equitability and per-vertex degrees") {
  auto g = generate_equitable(8, 2);
  CHECK(random_equitable_walk(g, 0, 99) == g);

  auto walked = random_equitable_walk(g, 100, 1);
  CHECK(classify(walked) == ColoringClass::Equitable);

  auto c5 = red_five_cycle();
  auto moved = random_equitable_walk(c5, 50, 7);
  for (Vertex v = 0; v < 5; ++v) {
    CHECK(moved.color_degree(v, kRed) == 2);
    CHECK(moved.color_degree(v, kBlue) == 2);
  }

  CHECK_THROWS_AS(random_equitable_walk(ColoredCompleteGraph::monochromatic(5, kRed), 10, 0),
                  std::invalid_argument);
}

TEST_CASE("classify is invariant under color swap and relabeling") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + rng.below_int(12);
    auto g = random_coloring(n, rng);
    auto cls = classify(g);

    ColoringBuilder swapped(n, 2);
    ColoringBuilder relabeled(n, 2);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        swapped.set(u, v, g.color(u, v) == kRed ? kBlue : kRed);
        relabeled.set(perm[u], perm[v], g.color(u, v));
      }
    CHECK(classify(swapped.build()) == cls);
    CHECK(classify(relabeled.build()) == cls);
  }
}

TEST_CASE("odd orders have even per-vertex gaps") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + 2 * rng.below_int(6);
    auto g = random_coloring(n, rng);
    for (Vertex v = 0; v < n; ++v) {
      int gap = std::abs(g.color_degree(v, kRed) - g.color_degree(v, kBlue));
      CHECK(gap % 2 == 0);
    }
  }
}
