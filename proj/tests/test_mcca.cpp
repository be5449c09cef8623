#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "mrc3/coloring.hpp"
#include "mrc3/mcca.hpp"
#include "mrc3/oracle.hpp"
#include "mrc3/rng.hpp"
#include "test_util.hpp"

using namespace mrc3;
using namespace mrc3::testutil;

namespace {

void check_sound(const ColoredCompleteGraph& g, const MccaResult& r) {
  REQUIRE(r.cover.has_value());
  CHECK(validate_cover(g.order(), *r.cover).ok);
  auto mono = monochromatic_color(g, *r.cover);
  REQUIRE(mono.has_value());
  CHECK(*mono == r.trace.cover_color);
  Rng rng(1234);
  for (int i = 0; i < 3; ++i) {
    std::int64_t c = 1 + static_cast<std::int64_t>(rng.below(40));
    CHECK(cover_cost(g, ReloadCostMatrix::uniform(2, c), *r.cover) == 0);
  }
}

}  // namespace

TEST_CASE("two disjoint red triangles in K_6: cover found in either color") {
  auto g = red_cliques(6, {{0, 1, 2}, {3, 4, 5}});
  auto r = mcca(g);
  check_sound(g, r);
  // red fails every branch; blue is K_{3,3} with min degree 3 = n/2
  CHECK(r.trace.terminal == MccaBranch::Dirac);
  CHECK(r.trace.cover_color == kBlue);
  REQUIRE(r.trace.attempts.size() == 2);
  CHECK(r.trace.attempts[0].branch == MccaBranch::None);
  CHECK(2 * r.trace.attempts[1].min_degree >= 6);
}

TEST_CASE("K_4 with both colors inducing 3-edge paths returns NONE") {
  auto g = k4_path_path();
  auto r = mcca(g);
  CHECK_FALSE(r.cover.has_value());
  CHECK(r.trace.terminal == MccaBranch::None);

  auto solved = min_reload_cycle_cover(g, ReloadCostMatrix::uniform(2, 1));
  CHECK(solved.status == SolveStatus::OracleSuggested);
  auto oracle = solve_exact(g, ReloadCostMatrix::uniform(2, 1));
  CHECK(oracle.optimal_cost == 2);
}

TEST_CASE("equitable K_9 yields a monochromatic Hamiltonian cycle") {
  auto g = generate_equitable(9, 5);
  auto r = mcca(g);
  check_sound(g, r);
  REQUIRE(r.cover->cycles.size() == 1);
  CHECK(r.cover->cycles[0].size() == 9);
}

TEST_CASE("red K_5 + K_4 in K_9 gives the two-clique cover through the bipartite branch") {
  auto g = red_cliques(9, {{0, 1, 2, 3, 4}, {5, 6, 7, 8}});
  auto r = mcca(g);
  check_sound(g, r);
  CHECK(r.trace.terminal == MccaBranch::BipartiteComplement);
  CHECK(r.trace.cover_color == kRed);
  REQUIRE(r.cover->cycles.size() == 2);
  CHECK(r.cover->cycles[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(r.cover->cycles[1] == std::vector<Vertex>{5, 6, 7, 8});
}

TEST_CASE("cut-vertex branch, unequal components") {
  // red: cut vertex 0 joins clique {1..5} (fully adjacent to 0) and clique
  // {6..12} (reached through 6 and 7). Components of red - 0: sizes 5 and 7.
  const int n = 13;
  ColoringBuilder b(n, 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.set(u, v, kBlue);
  for (Vertex u = 1; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) b.set(u, v, kRed);
  for (Vertex u = 6; u < 13; ++u)
    for (Vertex v = u + 1; v < 13; ++v) b.set(u, v, kRed);
  for (Vertex v = 1; v < 6; ++v) b.set(0, v, kRed);
  b.set(0, 6, kRed);
  b.set(0, 7, kRed);
  auto g = b.build();

  auto r = mcca(g);
  check_sound(g, r);
  CHECK(r.trace.terminal == MccaBranch::CutVertexUnequal);
  CHECK(r.trace.cover_color == kRed);
  REQUIRE(r.cover->cycles.size() == 2);
  std::vector<std::size_t> sizes = {r.cover->cycles[0].size(), r.cover->cycles[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{6, 7});
}

TEST_CASE("cut-vertex branch, equal components with splice") {
  // red: cut vertex 0 between cliques {1..6} and {7..12}, adjacent to four
  // vertices on the first side and two on the second.
  const int n = 13;
  ColoringBuilder b(n, 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.set(u, v, kBlue);
  for (Vertex u = 1; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v) b.set(u, v, kRed);
  for (Vertex u = 7; u < 13; ++u)
    for (Vertex v = u + 1; v < 13; ++v) b.set(u, v, kRed);
  for (Vertex v : {1, 2, 3, 4}) b.set(0, v, kRed);
  b.set(0, 7, kRed);
  b.set(0, 8, kRed);
  auto g = b.build();

  auto r = mcca(g);
  check_sound(g, r);
  CHECK(r.trace.terminal == MccaBranch::CutVertexEqual);
  REQUIRE(r.cover->cycles.size() == 2);
  std::vector<std::size_t> sizes = {r.cover->cycles[0].size(), r.cover->cycles[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{6, 7});
  // the spliced cycle contains the cut vertex 0
  bool found = false;
  for (const auto& cyc : r.cover->cycles)
    if (std::find(cyc.begin(), cyc.end(), 0) != cyc.end() && cyc.size() == 7) found = true;
  CHECK(found);
}

TEST_CASE("soundness on random colorings, structure of returned covers") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + rng.below_int(14);
    auto g = random_coloring(n, rng);
    auto r = mcca(g);
    if (!r.cover) continue;
    check_sound(g, r);
    CHECK(r.cover->cycles.size() <= 2);
    if (r.cover->cycles.size() == 2) {
      auto s0 = static_cast<int>(r.cover->cycles[0].size());
      auto s1 = static_cast<int>(r.cover->cycles[1].size());
      CHECK(std::abs(s0 - s1) <= 1);
      CHECK(s0 + s1 == n);
    }
  }
}

TEST_CASE("completeness on equitable instances at small orders") {
  for (int n : {5, 6, 8, 9, 12, 13}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto g = generate_equitable(n, seed);
      auto r = mcca(g);
      REQUIRE_MESSAGE(r.cover.has_value(), "equitable n=", n, " seed=", seed);
      check_sound(g, r);
    }
  }
}

TEST_CASE("branch trace consistency") {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + rng.below_int(12);
    auto g = random_coloring(n, rng);
    auto r = mcca(g);
    REQUIRE(!r.trace.attempts.empty());
    if (r.trace.terminal == MccaBranch::None) {
      CHECK_FALSE(r.cover.has_value());
      CHECK(r.trace.attempts.size() == 2);
      for (const auto& a : r.trace.attempts) CHECK(a.branch == MccaBranch::None);
    } else {
      const auto& winner = r.trace.attempts.back();
      CHECK(winner.branch == r.trace.terminal);
      if (winner.branch == MccaBranch::Dirac) CHECK(2 * winner.min_degree >= n);
      if (winner.branch == MccaBranch::BipartiteComplement) CHECK(winner.min_degree == n / 2);
      // per-color degree profile matches the colored graph
      for (const auto& a : r.trace.attempts) {
        int lo = n, hi = 0;
        for (Vertex v = 0; v < n; ++v) {
          lo = std::min(lo, g.color_degree(v, a.color));
          hi = std::max(hi, g.color_degree(v, a.color));
        }
        CHECK(a.min_degree == lo);
        CHECK(a.max_degree == hi);
      }
    }
  }
}

TEST_CASE("min_reload_cycle_cover status machine") {
  auto eq = generate_equitable(8, 3);
  auto found = min_reload_cycle_cover(eq, ReloadCostMatrix::uniform(2, 7));
  CHECK(found.status == SolveStatus::CoverFound);
  CHECK(found.cost == 0);
  REQUIRE(found.cover.has_value());

  auto none_small = min_reload_cycle_cover(k4_path_path(), ReloadCostMatrix::uniform(2, 1));
  CHECK(none_small.status == SolveStatus::OracleSuggested);
  CHECK_FALSE(none_small.cover.has_value());

  auto three = ColoredCompleteGraph::monochromatic(4, 0, 3);
  CHECK_THROWS_AS(mcca(three), std::invalid_argument);
}
