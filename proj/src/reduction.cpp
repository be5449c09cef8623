#include "mrc3/reduction.hpp"

#include <limits>
#include <stdexcept>

namespace mrc3 {

void GeneralInstance::set_edge(Vertex u, Vertex v, Color c) {
  graph.add_edge(u, v);
  edge_colors[static_cast<std::size_t>(u) * graph.order() + v] = c;
  edge_colors[static_cast<std::size_t>(v) * graph.order() + u] = c;
}

void GeneralInstance::validate() const {
  const int n = graph.order();
  if (edge_colors.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("GeneralInstance: color matrix has wrong size");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      Color c = edge_color(u, v);
      if (graph.has_edge(u, v)) {
        if (c < 0 || c >= costs.num_colors())
          throw std::invalid_argument("GeneralInstance: edge without a valid color");
      } else if (c != -1) {
        throw std::invalid_argument("GeneralInstance: color on a non-edge");
      }
    }
  }
}

ReducedInstance reduce_to_complete(const GeneralInstance& inst, std::int64_t big_m) {
  inst.validate();
  const int n = inst.graph.order();
  const int k = inst.costs.num_colors();
  const std::int64_t max_cost = inst.costs.max_cost();
  if (n > 0 && max_cost > std::numeric_limits<std::int64_t>::max() / n)
    throw std::invalid_argument("reduce_to_complete: big_m must exceed n * max cost");
  if (big_m <= n * max_cost)
    throw std::invalid_argument("reduce_to_complete: big_m must exceed n * max cost");

  std::vector<std::pair<Vertex, Vertex>> fresh;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!inst.graph.has_edge(u, v)) fresh.emplace_back(u, v);

  const int k2 = k + static_cast<int>(fresh.size());
  std::vector<Color> chi(static_cast<std::size_t>(n) * n, -1);
  auto put = [&](Vertex u, Vertex v, Color c) {
    chi[static_cast<std::size_t>(u) * n + v] = c;
    chi[static_cast<std::size_t>(v) * n + u] = c;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (inst.graph.has_edge(u, v)) put(u, v, inst.edge_color(u, v));
  for (std::size_t i = 0; i < fresh.size(); ++i)
    put(fresh[i].first, fresh[i].second, k + static_cast<int>(i));

  std::vector<std::int64_t> rho(static_cast<std::size_t>(k2) * k2, 0);
  for (int a = 0; a < k2; ++a) {
    for (int b = 0; b < k2; ++b) {
      if (a == b) continue;
      if (a < k && b < k) rho[static_cast<std::size_t>(a) * k2 + b] = inst.costs.cost(a, b);
      else rho[static_cast<std::size_t>(a) * k2 + b] = big_m;
    }
  }

  return ReducedInstance{
      ColoredCompleteGraph(n, k2, std::move(chi)),
      ReloadCostMatrix::permissive(k2, std::move(rho)),
      std::move(fresh),
  };
}

GeneralOracleResult solve_exact_general(const GeneralInstance& inst, int cap) {
  inst.validate();
  const int n = inst.graph.order();
  if (n > cap) throw std::invalid_argument("solve_exact_general: order above oracle cap");
  GeneralOracleResult out;
  if (n < 3) return out;

  enumerate_two_factors(n, [&](const CycleCover& cover) {
    // keep only covers whose edges all exist in the instance graph
    std::int64_t cost = 0;
    for (const auto& cyc : cover.cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        if (!inst.graph.has_edge(u, v)) return true;
      }
    }
    for (const auto& cyc : cover.cycles) {
      const std::size_t m = cyc.size();
      for (std::size_t i = 0; i < m; ++i) {
        Color in = inst.edge_color(cyc[(i + m - 1) % m], cyc[i]);
        Color at = inst.edge_color(cyc[i], cyc[(i + 1) % m]);
        cost = checked_add(cost, inst.costs.cost(in, at));
      }
    }
    if (!out.feasible || cost < out.optimal_cost) {
      out.feasible = true;
      out.optimal_cost = cost;
      out.witness = cover;
    }
    return cost != 0;
  }, cap);
  return out;
}

bool opt_preserved(const GeneralInstance& inst, std::int64_t big_m, int cap) {
  if (inst.graph.order() < 3)
    throw std::invalid_argument("opt_preserved: order below 3");
  auto original = solve_exact_general(inst, cap);
  auto reduced = reduce_to_complete(inst, big_m);
  auto completed = solve_exact(reduced.graph, reduced.costs, cap);
  if (original.feasible) return completed.optimal_cost == original.optimal_cost;
  return completed.optimal_cost >= big_m;
}

}  // namespace mrc3
