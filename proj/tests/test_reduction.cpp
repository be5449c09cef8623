#include <doctest.h>

#include <set>
#include <stdexcept>

#include "mrc3/reduction.hpp"
#include "mrc3/rng.hpp"
#include "test_util.hpp"

using namespace mrc3;
using namespace mrc3::testutil;

namespace {

GeneralInstance make_general(int n, const std::vector<std::tuple<Vertex, Vertex, Color>>& edges,
                             ReloadCostMatrix costs) {
  GeneralInstance inst{SimpleGraph(n), std::vector<Color>(static_cast<std::size_t>(n) * n, -1),
                       std::move(costs)};
  for (auto [u, v, c] : edges) inst.set_edge(u, v, c);
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("reduction of an already complete instance changes nothing") {
  auto unit = ReloadCostMatrix::uniform(2, 1);
  std::vector<std::tuple<Vertex, Vertex, Color>> edges;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) edges.emplace_back(u, v, (u + v) % 2);
  auto inst = make_general(4, edges, unit);
  auto red = reduce_to_complete(inst, 100);
  CHECK(red.fresh_edges.empty());
  CHECK(red.costs.num_colors() == 2);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(red.graph.color(u, v) == inst.edge_color(u, v));
}

TEST_CASE("5-cycle reduction preserves the zero optimum") {
  auto single = ReloadCostMatrix::uniform(1, 0);
  std::vector<std::tuple<Vertex, Vertex, Color>> edges;
  for (Vertex v = 0; v < 5; ++v) edges.emplace_back(v, (v + 1) % 5, 0);
  auto inst = make_general(5, edges, single);
  auto red = reduce_to_complete(inst, 100);
  CHECK(red.fresh_edges.size() == 5);
  CHECK(red.costs.num_colors() == 6);
  auto solved = solve_exact(red.graph, red.costs);
  CHECK(solved.optimal_cost == 0);
  CHECK(opt_preserved(inst, 100));
}

TEST_CASE("K_4 minus an edge, all red") {
  auto single = ReloadCostMatrix::uniform(1, 0);
  std::vector<std::tuple<Vertex, Vertex, Color>> edges;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v)
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v, 0);
  auto inst = make_general(4, edges, single);
  auto general = solve_exact_general(inst);
  CHECK(general.feasible);
  CHECK(general.optimal_cost == 0);
  CHECK(opt_preserved(inst, 100));
}

TEST_CASE("infeasible star: reduced optimum reaches big_m") {
  auto single = ReloadCostMatrix::uniform(1, 0);
  std::vector<std::tuple<Vertex, Vertex, Color>> edges;
  for (Vertex v = 1; v < 5; ++v) edges.emplace_back(0, v, 0);
  auto inst = make_general(5, edges, single);
  CHECK_FALSE(solve_exact_general(inst).feasible);
  auto red = reduce_to_complete(inst, 100);
  CHECK(solve_exact(red.graph, red.costs).optimal_cost >= 100);
  CHECK(opt_preserved(inst, 100));
}

TEST_CASE("single red triangle") {
  auto single = ReloadCostMatrix::uniform(1, 0);
  auto inst = make_general(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}, single);
  CHECK(solve_exact_general(inst).optimal_cost == 0);
  CHECK(opt_preserved(inst, 50));
}

TEST_CASE("reduction invariants: originals untouched, fresh colors distinct") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + rng.below_int(4);
    int k = 1 + rng.below_int(3);
    auto costs = [&] {
      std::vector<std::int64_t> rho(static_cast<std::size_t>(k) * k, 0);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (a != b) rho[static_cast<std::size_t>(a) * k + b] = 1 + rng.below(9);
      return ReloadCostMatrix::permissive(k, std::move(rho));
    }();
    GeneralInstance inst{SimpleGraph(n), std::vector<Color>(static_cast<std::size_t>(n) * n, -1), costs};
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.chance(60, 100)) inst.set_edge(u, v, rng.below_int(k));
    inst.validate();

    std::int64_t big_m = n * costs.max_cost() + 1 + rng.below(50);
    auto red = reduce_to_complete(inst, big_m);

    long long non_edges = static_cast<long long>(n) * (n - 1) / 2 - inst.graph.edge_count();
    CHECK(static_cast<long long>(red.fresh_edges.size()) == non_edges);
    CHECK(red.costs.num_colors() == k + static_cast<int>(non_edges));

    std::set<Color> fresh_seen;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (inst.graph.has_edge(u, v)) {
          CHECK(red.graph.color(u, v) == inst.edge_color(u, v));
        } else {
          Color c = red.graph.color(u, v);
          CHECK(c >= k);
          fresh_seen.insert(c);
        }
      }
    CHECK(static_cast<long long>(fresh_seen.size()) == non_edges);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) CHECK(red.costs.cost(a, b) == costs.cost(a, b));
    for (Color c = k; c < red.costs.num_colors(); ++c)
      for (Color d = 0; d < red.costs.num_colors(); ++d) {
        if (c == d) continue;
        CHECK(red.costs.cost(c, d) == big_m);
        CHECK(red.costs.cost(d, c) == big_m);
      }
  }
}

TEST_CASE("random feasible instances preserve the optimum") {
  Rng rng(37);
  int done = 0;
  while (done < 12) {
    int n = 4 + rng.below_int(4);  // 4..7
    int k = 1 + rng.below_int(2);
    auto costs = ReloadCostMatrix::uniform(k, 3);
    GeneralInstance inst{SimpleGraph(n), std::vector<Color>(static_cast<std::size_t>(n) * n, -1), costs};
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.chance(70, 100)) inst.set_edge(u, v, rng.below_int(k));
    inst.validate();
    if (!solve_exact_general(inst).feasible) continue;
    ++done;
    CHECK(opt_preserved(inst, n * 3 + 1));
  }
}

TEST_CASE("big_m lower bound is validated") {
  auto costs = ReloadCostMatrix::uniform(2, 5);
  auto inst = make_general(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}}, costs);
  CHECK_THROWS_AS(reduce_to_complete(inst, 4 * 5), std::invalid_argument);
  CHECK_NOTHROW(reduce_to_complete(inst, 4 * 5 + 1));
}
