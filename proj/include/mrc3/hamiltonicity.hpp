#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mrc3/graph.hpp"

namespace mrc3 {

using HamiltonianCycle = std::vector<Vertex>;

/// Independent checker: every vertex exactly once, every consecutive pair
/// (cyclically) an edge of g. Shares no logic with the constructions.
bool is_hamiltonian_cycle(const SimpleGraph& g, const HamiltonianCycle& cycle);

/// Rotation-based Hamiltonian cycle construction: grow a maximal path, close
/// it through a crossing pair of edges, re-open the cycle through an edge
/// leaving it, repeat. Guaranteed to return a cycle when min degree >= n/2
/// and n >= 3; may still succeed below that bound. Deterministic
/// (lowest-index tie-breaking throughout).
std::optional<HamiltonianCycle> dirac_hamiltonian(const SimpleGraph& g);

/// Fixed point of joining non-adjacent vertices with degree sum >= n.
SimpleGraph closure(const SimpleGraph& g);

struct ClosureTrace {
  SimpleGraph graph;
  std::vector<std::pair<Vertex, Vertex>> added;  // in insertion order
};
ClosureTrace closure_with_order(const SimpleGraph& g);

/// When cl(g) is complete: arrange the vertices in any cyclic order, then
/// unwind the closure edge additions newest-first, repairing the cycle with
/// a crossing pair each time an undone edge is used. Returns nullopt when
/// the closure is not complete.
std::optional<HamiltonianCycle> closure_hamiltonian(const SimpleGraph& g);

enum class ExceptionalFamily { TwoCliquesOneCut, IndependentJoin, NotExceptional };

const char* to_string(ExceptionalFamily f);

/// Exact recognition of the two non-Hamiltonian families with min degree
/// floor(n/2): two ceil(n/2)-cliques sharing one vertex, and the join of an
/// independent ceil(n/2)-set with any graph on the remaining vertices.
/// Requires odd n.
ExceptionalFamily detect_exceptional(const SimpleGraph& g);

/// Hamiltonian cycle under the relaxed bound min degree >= floor(n/2) for
/// connected graphs, returning nullopt exactly on the exceptional families.
/// Construction layers: exceptional-family screen, rotation construction,
/// closure construction, seeded rotation-extension restarts, and (n <= 20)
/// exact bitmask search. Throws std::invalid_argument when the input is
/// disconnected or violates the degree bound.
std::optional<HamiltonianCycle> extension_dirac_hamiltonian(const SimpleGraph& g);

/// Seeded rotation-extension search (restart schedule is fixed, so results
/// are deterministic). Heuristic: may miss cycles on sparse inputs.
std::optional<HamiltonianCycle> posa_hamiltonian(const SimpleGraph& g, int max_restarts);

/// Exact Hamiltonian cycle by bitmask dynamic programming. Returns nullopt
/// for graphs without one; refuses orders above `max_order`.
std::optional<HamiltonianCycle> exact_hamiltonian_cycle(const SimpleGraph& g, int max_order = 20);

struct SufficiencyReport {
  bool dirac = false;
  bool chvatal_degree_sequence = false;
  bool nash_williams = false;
  bool moon_moser = false;
};

/// Classic sufficiency conditions, used as test oracles only. moon_moser
/// evaluates on the supplied bipartition, or on a detected one when null;
/// it is false when no balanced bipartition exists and vacuously true when
/// there is no nonadjacent cross pair.
SufficiencyReport sufficiency_predicates(const SimpleGraph& g,
                                         const std::vector<int>* bipartition_sides = nullptr);

}  // namespace mrc3
