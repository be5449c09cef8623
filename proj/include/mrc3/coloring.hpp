#pragma once

#include <cstdint>
#include <stdexcept>

#include "mrc3/graph.hpp"

namespace mrc3 {

/// Requested instance cannot exist (e.g. equitable coloring of K_{4k+3}).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ColoringClass { Equitable, NearlyEquitableOnly, Neither };

const char* to_string(ColoringClass c);

/// max_v | |red(v)| - |blue(v)| | for a 2-edge-coloring.
int max_color_degree_gap(const ColoredCompleteGraph& g);

/// Equitable iff every per-vertex gap is <= 1, NearlyEquitableOnly iff the
/// maximum gap is exactly 2. Requires exactly 2 colors.
ColoringClass classify(const ColoredCompleteGraph& g);

/// A complete graph admits an equitable 2-edge-coloring iff n != 4k+3.
/// Requires n >= 3.
bool equitable_feasible(int n);

/// Seeded equitable 2-edge-coloring of K_n. Even n: round-robin
/// 1-factorization with alternately colored matchings. n = 4k+1: Walecki
/// Hamiltonian decomposition with alternately colored cycles. The result is
/// diversified by relabeling and degree-preserving swaps, and certified by
/// classify before returning.
ColoredCompleteGraph generate_equitable(int n, std::uint64_t seed);

/// Seeded nearly equitable 2-edge-coloring. With force_non_equitable the
/// result classifies NearlyEquitableOnly (infeasible for even n and n = 3),
/// otherwise it classifies Equitable or NearlyEquitableOnly.
ColoredCompleteGraph generate_nearly_equitable(int n, bool force_non_equitable, std::uint64_t seed);

/// Random walk over equitable colorings: each step swaps colors along an
/// alternating 4-cycle, which preserves every per-vertex color degree.
/// Requires classify(g) == Equitable.
ColoredCompleteGraph random_equitable_walk(const ColoredCompleteGraph& g, int steps, std::uint64_t seed);

}  // namespace mrc3
