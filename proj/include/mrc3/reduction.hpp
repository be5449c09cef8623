#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mrc3/graph.hpp"
#include "mrc3/oracle.hpp"
#include "mrc3/reload.hpp"

namespace mrc3 {

/// Arbitrary edge-colored graph with a reload cost function; the input side
/// of the completion reduction.
struct GeneralInstance {
  SimpleGraph graph;
  std::vector<Color> edge_colors;  // n*n flat, -1 where there is no edge
  ReloadCostMatrix costs = ReloadCostMatrix::uniform(1, 0);

  Color edge_color(Vertex u, Vertex v) const {
    return edge_colors[static_cast<std::size_t>(u) * graph.order() + v];
  }
  void set_edge(Vertex u, Vertex v, Color c);
  void validate() const;  // every edge colored, colors within the matrix
};

struct ReducedInstance {
  ColoredCompleteGraph graph;
  ReloadCostMatrix costs;
  /// fresh_edges[i] is the non-edge that received fresh color k+i; fresh ids
  /// are allocated in non-edge lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> fresh_edges;
};

/// Completes the graph: original edges keep their colors, each non-edge gets
/// a fresh color whose reload cost against every other color is big_m.
/// Requires big_m > n * max(original costs).
ReducedInstance reduce_to_complete(const GeneralInstance& inst, std::int64_t big_m);

struct GeneralOracleResult {
  bool feasible = false;
  std::int64_t optimal_cost = 0;
  CycleCover witness;
};

/// Exact optimum over all cycle covers that use only edges of the instance
/// graph. Requires n <= cap.
GeneralOracleResult solve_exact_general(const GeneralInstance& inst, int cap = kDefaultOracleCap);

/// True iff reduced and original optima agree, or the original is infeasible
/// and the reduced optimum is at least big_m. Requires n <= cap.
bool opt_preserved(const GeneralInstance& inst, std::int64_t big_m, int cap = kDefaultOracleCap);

}  // namespace mrc3
