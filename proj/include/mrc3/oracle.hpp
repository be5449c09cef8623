#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mrc3/graph.hpp"
#include "mrc3/reload.hpp"

namespace mrc3 {

inline constexpr int kDefaultOracleCap = 12;
inline constexpr int kMonochromaticSearchCap = 15;

/// Enumerates every partition of {0..n-1} into cycles of length >= 3, each
/// exactly once in canonical form. The callback returns false to stop early.
/// Enumeration anchors each cycle at its lowest vertex and keeps only the
/// orientation with second vertex < last vertex, so no dedup set is needed.
/// Requires 3 <= n <= cap.
void enumerate_two_factors(int n, const std::function<bool(const CycleCover&)>& visit,
                           int cap = kDefaultOracleCap);

/// Convenience collector for small n.
std::vector<CycleCover> all_two_factors(int n, int cap = kDefaultOracleCap);

long long count_two_factors(int n, int cap = kDefaultOracleCap);

struct OracleResult {
  std::int64_t optimal_cost = 0;
  CycleCover witness;
  long long explored = 0;  // covers enumerated before termination
};

/// Exact minimum over all 2-factors; stops early at cost zero since reload
/// costs are nonnegative. Requires n <= cap.
OracleResult solve_exact(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                         int cap = kDefaultOracleCap);

struct MonochromaticSearch {
  bool exists = false;
  std::optional<Color> color;
  std::optional<CycleCover> witness;
};

/// True iff some color's induced subgraph admits a cycle cover with all
/// cycles of length >= 3 (single-color criterion). Requires n <= cap.
MonochromaticSearch exhaustive_monochromatic_exists(const ColoredCompleteGraph& g,
                                                    int cap = kMonochromaticSearchCap);

/// Backtracking search for a 2-factor with girth >= 3 inside an arbitrary
/// graph. Used by the single-color search and by the reduction oracle.
std::optional<CycleCover> find_two_factor(const SimpleGraph& g);

}  // namespace mrc3
