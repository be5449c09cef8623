#include "mrc3/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mrc3/rng.hpp"

namespace mrc3 {

const char* to_string(ColoringClass c) {
  switch (c) {
    case ColoringClass::Equitable: return "Equitable";
    case ColoringClass::NearlyEquitableOnly: return "NearlyEquitableOnly";
    case ColoringClass::Neither: return "Neither";
  }
  return "?";
}

int max_color_degree_gap(const ColoredCompleteGraph& g) {
  if (g.num_colors() != 2) throw std::invalid_argument("max_color_degree_gap: needs exactly 2 colors");
  int worst = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    int r = g.color_degree(v, kRed);
    int b = g.order() - 1 - r;
    worst = std::max(worst, std::abs(r - b));
  }
  return worst;
}

ColoringClass classify(const ColoredCompleteGraph& g) {
  int gap = max_color_degree_gap(g);
  if (gap <= 1) return ColoringClass::Equitable;
  if (gap == 2) return ColoringClass::NearlyEquitableOnly;
  return ColoringClass::Neither;
}

bool equitable_feasible(int n) {
  if (n < 3) throw std::invalid_argument("equitable_feasible: order below 3");
  return n % 4 != 3;
}

namespace {

// Round-robin 1-factorization of K_n (even n): vertex n-1 fixed, the rest on
// a circle; round r pairs (n-1, r) and (r+i, r-i) mod n-1. Rounds are colored
// alternately, so every vertex ends with ceil((n-1)/2) red edges.
ColoringBuilder even_round_robin(int n) {
  ColoringBuilder b(n, 2);
  const int m = n - 1;
  for (int round = 0; round < m; ++round) {
    Color c = (round % 2 == 0) ? kRed : kBlue;
    b.set(n - 1, round, c);
    for (int i = 1; i <= (n - 2) / 2; ++i) {
      int u = (round + i) % m;
      int v = (round - i + m) % m;
      b.set(u, v, c);
    }
  }
  return b;
}

// Walecki decomposition of K_{2m+1} into m Hamiltonian cycles. Cycle j runs
// hub, j, j+1, j-1, j+2, j-2, ... over the ring 0..2m-1. Cycles are colored
// alternately red/blue.
ColoringBuilder walecki_alternating(int n) {
  ColoringBuilder b(n, 2);
  const int ring = n - 1;  // even
  const int m = ring / 2;  // number of Hamiltonian cycles
  const Vertex hub = n - 1;
  for (int j = 0; j < m; ++j) {
    Color c = (j % 2 == 0) ? kRed : kBlue;
    std::vector<Vertex> seq;
    seq.reserve(ring);
    seq.push_back(j);
    for (int i = 1; i < ring; ++i) {
      int step = (i + 1) / 2;
      int v = (i % 2 == 1) ? (j + step) % ring : (j - step + ring) % ring;
      seq.push_back(v);
    }
    b.set(hub, seq.front(), c);
    for (int i = 0; i + 1 < ring; ++i) b.set(seq[i], seq[i + 1], c);
    b.set(seq.back(), hub, c);
  }
  return b;
}

void relabel_vertices(ColoringBuilder& b, Rng& rng) {
  std::vector<Vertex> perm(b.n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  ColoringBuilder out(b.n, b.num_colors);
  for (Vertex u = 0; u < b.n; ++u)
    for (Vertex v = u + 1; v < b.n; ++v) out.set(perm[u], perm[v], b.get(u, v));
  b = out;
}

void swap_colors(ColoringBuilder& b) {
  for (Vertex u = 0; u < b.n; ++u)
    for (Vertex v = u + 1; v < b.n; ++v) b.set(u, v, b.get(u, v) == kRed ? kBlue : kRed);
}

// One step: sample up to `attempts` vertex 4-tuples looking for an
// alternating 4-cycle (uv and wx one color, vw and xu the other); swapping
// its colors preserves every per-vertex color degree exactly.
bool four_swap_step(ColoringBuilder& b, Rng& rng, int attempts) {
  const int n = b.n;
  if (n < 4) return false;
  for (int t = 0; t < attempts; ++t) {
    Vertex u = rng.below_int(n), v = rng.below_int(n), w = rng.below_int(n), x = rng.below_int(n);
    if (u == v || u == w || u == x || v == w || v == x || w == x) continue;
    Color a = b.get(u, v);
    if (b.get(w, x) != a) continue;
    Color other = (a == kRed) ? kBlue : kRed;
    if (b.get(v, w) != other || b.get(x, u) != other) continue;
    b.set(u, v, other);
    b.set(w, x, other);
    b.set(v, w, a);
    b.set(x, u, a);
    return true;
  }
  return false;
}

void four_swap_walk(ColoringBuilder& b, int steps, Rng& rng) {
  for (int s = 0; s < steps; ++s) four_swap_step(b, rng, 64);
}

int red_minus_blue(const ColoringBuilder& b, Vertex v) {
  int red = 0;
  for (Vertex u = 0; u < b.n; ++u)
    if (u != v && b.get(u, v) == kRed) ++red;
  return 2 * red - (b.n - 1);
}

// Recolors {u,v} iff both endpoints stay within gap 2 afterwards.
bool guarded_recolor(ColoringBuilder& b, Vertex u, Vertex v) {
  Color c = b.get(u, v);
  int sign = (c == kRed) ? 1 : -1;  // recoloring moves diff by -2*sign
  if (sign * red_minus_blue(b, u) < 0 || sign * red_minus_blue(b, v) < 0) return false;
  b.set(u, v, c == kRed ? kBlue : kRed);
  return true;
}

void guarded_recolor_walk(ColoringBuilder& b, int steps, Rng& rng) {
  for (int s = 0; s < steps; ++s) {
    Vertex u = rng.below_int(b.n), v = rng.below_int(b.n);
    if (u == v) continue;
    guarded_recolor(b, u, v);
  }
}

ColoredCompleteGraph certified(const ColoringBuilder& b, ColoringClass want) {
  auto g = b.build();
  if (classify(g) != want) throw std::logic_error("coloring generator postcondition failed");
  return g;
}

}  // namespace

ColoredCompleteGraph generate_equitable(int n, std::uint64_t seed) {
  if (!equitable_feasible(n))
    throw InfeasibleError("K_n with n = 4k+3 admits no equitable 2-edge-coloring");
  Rng rng(seed);
  ColoringBuilder b = (n % 2 == 0) ? even_round_robin(n) : walecki_alternating(n);
  relabel_vertices(b, rng);
  if (rng.coin()) swap_colors(b);
  four_swap_walk(b, 3 * n, rng);
  return certified(b, ColoringClass::Equitable);
}

ColoredCompleteGraph generate_nearly_equitable(int n, bool force_non_equitable, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("generate_nearly_equitable: order below 3");
  if (force_non_equitable && n % 2 == 0)
    throw InfeasibleError("even-order complete graphs admit no non-equitable nearly equitable coloring");
  if (force_non_equitable && n == 3)
    throw InfeasibleError("K_3 is excluded from forced nearly equitable generation");
  Rng rng(seed);
  if (n % 2 == 0) return generate_equitable(n, rng.next_u64());

  ColoringBuilder b = walecki_alternating(n);
  // For n = 4k+1 the alternating Walecki coloring is equitable; seed the
  // gap-2 profile by recoloring one red edge (both endpoints move to gap 2).
  if (n % 4 == 1 && force_non_equitable) {
    Vertex u = rng.below_int(n), v;
    do { v = rng.below_int(n); } while (v == u);
    if (b.get(u, v) != kRed) swap_colors(b);
    b.set(u, v, kBlue);
  }
  relabel_vertices(b, rng);
  if (rng.coin()) swap_colors(b);
  guarded_recolor_walk(b, n * n / 2, rng);
  four_swap_walk(b, 3 * n, rng);

  auto g = b.build();
  if (force_non_equitable && classify(g) == ColoringClass::Equitable) {
    // The walk drifted back to all-zero gaps; any single recolor restores a
    // gap-2 vertex pair without exceeding 2 anywhere.
    Vertex u = rng.below_int(n), v;
    do { v = rng.below_int(n); } while (v == u);
    b.set(u, v, b.get(u, v) == kRed ? kBlue : kRed);
    g = b.build();
  }
  ColoringClass got = classify(g);
  if (force_non_equitable && got != ColoringClass::NearlyEquitableOnly)
    throw std::logic_error("coloring generator postcondition failed");
  if (!force_non_equitable && got == ColoringClass::Neither)
    throw std::logic_error("coloring generator postcondition failed");
  return g;
}

ColoredCompleteGraph random_equitable_walk(const ColoredCompleteGraph& g, int steps, std::uint64_t seed) {
  if (classify(g) != ColoringClass::Equitable)
    throw std::invalid_argument("random_equitable_walk: input must be equitable");
  if (steps < 0) throw std::invalid_argument("random_equitable_walk: negative step count");
  Rng rng(seed);
  ColoringBuilder b(g);
  four_swap_walk(b, steps, rng);
  return certified(b, ColoringClass::Equitable);
}

}  // namespace mrc3
