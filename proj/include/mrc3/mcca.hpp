#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrc3/graph.hpp"
#include "mrc3/oracle.hpp"
#include "mrc3/reload.hpp"

namespace mrc3 {

enum class MccaBranch {
  Dirac,
  Closure,
  BipartiteComplement,
  Extension,
  CutVertexUnequal,
  CutVertexEqual,
  None,
};

const char* to_string(MccaBranch b);

/// Per-color observation of one attempt: degree profile, 2-connectivity of
/// the color subgraph, and the branch that produced a cover (None when the
/// color fell through).
struct MccaColorAttempt {
  Color color = -1;
  MccaBranch branch = MccaBranch::None;
  int min_degree = 0;
  int max_degree = 0;
  bool biconnected = false;
  bool has_cut_vertex = false;
};

struct MccaTrace {
  std::vector<MccaColorAttempt> attempts;  // in try order (red first)
  MccaBranch terminal = MccaBranch::None;
  Color cover_color = -1;  // color of the returned cover, -1 when none
};

struct MccaResult {
  std::optional<CycleCover> cover;
  MccaTrace trace;
};

/// Monochromatic cycle cover search over a 2-edge-colored complete graph.
/// Tries red then blue; within a color: Dirac bound, complete closure,
/// complete-bipartite complement split, relaxed-degree extension, and the
/// two cut-vertex constructions (guarded by floor(n/2) >= 4). Every returned
/// cover is validated and single-color monochromatic. Throws when the input
/// does not use exactly 2 colors.
MccaResult mcca(const ColoredCompleteGraph& g);

enum class SolveStatus { CoverFound, OracleSuggested, Inconclusive };

const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Inconclusive;
  std::optional<CycleCover> cover;
  std::int64_t cost = 0;
  MccaTrace trace;
};

/// Runs mcca; a returned cover has cost zero, which is optimal since reload
/// costs are nonnegative. On NONE, reports whether the exact oracle applies
/// at this order instead of solving.
SolveResult min_reload_cycle_cover(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                                   int oracle_cap = kDefaultOracleCap);

}  // namespace mrc3
