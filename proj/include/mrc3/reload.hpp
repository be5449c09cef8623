#pragma once

#include <cstdint>
#include <vector>

#include "mrc3/graph.hpp"

namespace mrc3 {

/// Reload cost function rho: C x C -> N0 with zero diagonal. The strict
/// factory additionally enforces rho(c1,c2) > 0 for c1 != c2; the permissive
/// one allows zero off-diagonal entries (no algorithm here relies on strict
/// positivity). Cost accumulation is overflow-checked so that big-M values
/// from the reduction cannot wrap silently.
class ReloadCostMatrix {
 public:
  static ReloadCostMatrix strict(int num_colors, std::vector<std::int64_t> rho);
  static ReloadCostMatrix permissive(int num_colors, std::vector<std::int64_t> rho);
  /// All off-diagonal entries equal to `off_diagonal`.
  static ReloadCostMatrix uniform(int num_colors, std::int64_t off_diagonal);

  int num_colors() const { return k_; }
  std::int64_t cost(Color a, Color b) const;
  std::int64_t max_cost() const;

  bool is_symmetric() const;
  bool satisfies_triangle() const;

  bool operator==(const ReloadCostMatrix& other) const = default;

 private:
  ReloadCostMatrix(int k, std::vector<std::int64_t> rho, bool strict_positive);

  int k_ = 0;
  std::vector<std::int64_t> rho_;
};

/// Throws std::overflow_error when a + b does not fit in int64.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Sum of reload costs at internal vertices of the path; 0 for a single edge.
std::int64_t path_cost(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                       const std::vector<Vertex>& path);
/// Path cost plus the wrap-around junction; requires length >= 3.
std::int64_t cycle_cost(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                        const std::vector<Vertex>& cycle);
/// Sum over cycle components; requires a valid cover.
std::int64_t cover_cost(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                        const CycleCover& cover);

}  // namespace mrc3
