#include "mrc3/hamiltonicity.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "mrc3/rng.hpp"

namespace mrc3 {

bool is_hamiltonian_cycle(const SimpleGraph& g, const HamiltonianCycle& cycle) {
  const int n = g.order();
  if (n < 3 || cycle.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

namespace {

// Extends the path at both ends, always taking the lowest-indexed
// unvisited neighbor, until neither end can grow.
void extend_to_maximal(const SimpleGraph& g, std::deque<Vertex>& path, std::vector<char>& in_path) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (;;) {
      Vertex tail = path.back();
      Vertex next = -1;
      for (Vertex u = 0; u < g.order(); ++u)
        if (!in_path[u] && g.has_edge(tail, u)) { next = u; break; }
      if (next < 0) break;
      path.push_back(next);
      in_path[next] = 1;
      grew = true;
    }
    for (;;) {
      Vertex head = path.front();
      Vertex next = -1;
      for (Vertex u = 0; u < g.order(); ++u)
        if (!in_path[u] && g.has_edge(head, u)) { next = u; break; }
      if (next < 0) break;
      path.push_front(next);
      in_path[next] = 1;
      grew = true;
    }
  }
}

// Closes the path x_0..x_k into a cycle through the first index i with
// x_0 x_{i+1} and x_i x_k both edges; the cycle is
// x_0, x_{i+1}, ..., x_k, x_i, x_{i-1}, ..., x_1.
std::optional<std::vector<Vertex>> close_through_crossing(const SimpleGraph& g,
                                                          const std::vector<Vertex>& p) {
  if (p.size() < 3) return std::nullopt;
  const std::size_t k = p.size() - 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(p[0], p[i + 1]) || !g.has_edge(p[i], p[k])) continue;
    std::vector<Vertex> cycle;
    cycle.reserve(p.size());
    cycle.push_back(p[0]);
    for (std::size_t t = i + 1; t <= k; ++t) cycle.push_back(p[t]);
    for (std::size_t t = i; t >= 1; --t) cycle.push_back(p[t]);
    return cycle;
  }
  return std::nullopt;
}

}  // namespace

std::optional<HamiltonianCycle> dirac_hamiltonian(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  std::deque<Vertex> path{0};
  std::vector<char> in_path(n, 0);
  in_path[0] = 1;
  for (int round = 0; round <= n + 1; ++round) {
    extend_to_maximal(g, path, in_path);
    std::vector<Vertex> p(path.begin(), path.end());
    auto cycle = close_through_crossing(g, p);
    if (!cycle) return std::nullopt;
    if (cycle->size() == static_cast<std::size_t>(n)) return cycle;

    // Re-open: lowest outside vertex with a neighbor on the cycle, attached
    // so the new path ends at the lower-numbered cycle neighbor.
    const auto& c = *cycle;
    const std::size_t m = c.size();
    Vertex out_v = -1;
    std::size_t at = 0;
    for (Vertex v = 0; v < n && out_v < 0; ++v) {
      if (in_path[v]) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (g.has_edge(v, c[j])) { out_v = v; at = j; break; }
    }
    if (out_v < 0) return std::nullopt;  // cycle is a full component, cannot grow

    Vertex prev = c[(at + m - 1) % m];
    Vertex next = c[(at + 1) % m];
    path.clear();
    std::fill(in_path.begin(), in_path.end(), 0);
    path.push_back(out_v);
    in_path[out_v] = 1;
    if (prev < next) {
      // drop edge (prev, c[at]); walk forward ending at prev
      for (std::size_t t = 0; t < m; ++t) {
        Vertex v = c[(at + t) % m];
        path.push_back(v);
        in_path[v] = 1;
      }
    } else {
      // drop edge (c[at], next); walk backward ending at next
      for (std::size_t t = 0; t < m; ++t) {
        Vertex v = c[(at + m - t) % m];
        path.push_back(v);
        in_path[v] = 1;
      }
    }
  }
  return std::nullopt;
}

SimpleGraph closure(const SimpleGraph& g) { return closure_with_order(g).graph; }

ClosureTrace closure_with_order(const SimpleGraph& g) {
  ClosureTrace trace{g, {}};
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (trace.graph.has_edge(u, v)) continue;
        if (trace.graph.degree(u) + trace.graph.degree(v) >= n) {
          trace.graph.add_edge(u, v);
          trace.added.emplace_back(u, v);
          changed = true;
        }
      }
    }
  }
  return trace;
}

namespace {

// Index i such that {cycle[i], cycle[i+1 mod n]} == {a, b}, or -1.
int find_cycle_edge(const std::vector<Vertex>& cycle, Vertex a, Vertex b) {
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vertex u = cycle[i], v = cycle[(i + 1) % n];
    if ((u == a && v == b) || (u == b && v == a)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::optional<HamiltonianCycle> closure_hamiltonian(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  ClosureTrace trace = closure_with_order(g);
  if (!trace.graph.is_complete()) return std::nullopt;

  std::vector<Vertex> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);

  // Undo additions newest-first; each repair uses only edges of the partial
  // closure in which the undone edge earned its degree-sum condition.
  SimpleGraph h = trace.graph;
  for (auto it = trace.added.rbegin(); it != trace.added.rend(); ++it) {
    auto [a, b] = *it;
    h.remove_edge(a, b);
    int pos = find_cycle_edge(cycle, a, b);
    if (pos < 0) continue;
    std::vector<Vertex> path(n);
    for (int t = 0; t < n; ++t) path[t] = cycle[(pos + 1 + t) % n];
    auto repaired = close_through_crossing(h, path);
    if (!repaired) return std::nullopt;
    cycle = std::move(*repaired);
  }
  if (!is_hamiltonian_cycle(g, cycle)) return std::nullopt;
  return cycle;
}

const char* to_string(ExceptionalFamily f) {
  switch (f) {
    case ExceptionalFamily::TwoCliquesOneCut: return "TwoCliquesOneCut";
    case ExceptionalFamily::IndependentJoin: return "IndependentJoin";
    case ExceptionalFamily::NotExceptional: return "NotExceptional";
  }
  return "?";
}

namespace {

bool is_clique(const SimpleGraph& g, const std::vector<Vertex>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

}  // namespace

ExceptionalFamily detect_exceptional(const SimpleGraph& g) {
  const int n = g.order();
  if (n % 2 == 0) throw std::invalid_argument("detect_exceptional: order must be odd");
  const int half = (n - 1) / 2;

  for (Vertex x = 0; x < n; ++x) {
    auto comps = components_excluding(g, x);
    if (comps.size() != 2) continue;
    if (comps[0].size() != static_cast<std::size_t>(half) ||
        comps[1].size() != static_cast<std::size_t>(half))
      continue;
    bool both_cliques = true;
    for (const auto& comp : comps) {
      std::vector<Vertex> with_x = comp;
      with_x.push_back(x);
      if (!is_clique(g, with_x)) { both_cliques = false; break; }
    }
    if (both_cliques) return ExceptionalFamily::TwoCliquesOneCut;
  }

  // Join family: the independent set is exactly one component of the
  // complement, and that component is a complement-clique of size ceil(n/2).
  SimpleGraph co = g.complement();
  for (const auto& comp : connected_components(co)) {
    if (comp.size() != static_cast<std::size_t>(half + 1)) continue;
    if (is_clique(co, comp)) return ExceptionalFamily::IndependentJoin;
  }
  return ExceptionalFamily::NotExceptional;
}

std::optional<HamiltonianCycle> posa_hamiltonian(const SimpleGraph& g, int max_restarts) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (int restart = 0; restart < max_restarts; ++restart) {
    Rng rng(0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart + 1) + 0xD1B54A32D192ED03ull);
    std::vector<Vertex> path{static_cast<Vertex>(restart % n)};
    std::vector<char> in_path(n, 0);
    in_path[path[0]] = 1;
    int budget = 8 * n * n;
    while (budget-- > 0) {
      Vertex end = path.back();
      std::vector<Vertex> fresh;
      for (Vertex u = 0; u < n; ++u)
        if (!in_path[u] && g.has_edge(end, u)) fresh.push_back(u);
      if (!fresh.empty()) {
        Vertex v = fresh[rng.below_int(static_cast<int>(fresh.size()))];
        path.push_back(v);
        in_path[v] = 1;
        if (path.size() == static_cast<std::size_t>(n))
          if (auto cycle = close_through_crossing(g, path)) return cycle;
        continue;
      }
      if (path.size() == static_cast<std::size_t>(n))
        if (auto cycle = close_through_crossing(g, path)) return cycle;
      // rotate: pivot on a neighbor of the endpoint inside the path
      std::vector<std::size_t> pivots;
      for (std::size_t i = 0; i + 2 < path.size(); ++i)
        if (g.has_edge(end, path[i])) pivots.push_back(i);
      if (pivots.empty()) break;
      std::size_t i = pivots[rng.below_int(static_cast<int>(pivots.size()))];
      std::reverse(path.begin() + i + 1, path.end());
      if (rng.chance(1, 4)) std::reverse(path.begin(), path.end());
    }
  }
  return std::nullopt;
}

std::optional<HamiltonianCycle> exact_hamiltonian_cycle(const SimpleGraph& g, int max_order) {
  const int n = g.order();
  if (n < 3 || n > max_order || n > 25) return std::nullopt;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[u] |= std::uint32_t{1} << v;

  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  // ends[mask] = endpoints v of paths 0 -> v visiting exactly `mask`
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1)) continue;
    std::uint32_t es = ends[mask];
    if (!es) continue;
    while (es) {
      int v = std::countr_zero(es);
      es &= es - 1;
      std::uint32_t nexts = adj[v] & ~mask;
      while (nexts) {
        int w = std::countr_zero(nexts);
        nexts &= nexts - 1;
        ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  std::uint32_t closers = ends[full] & adj[0] & ~std::uint32_t{1};
  if (!closers) return std::nullopt;

  // Reconstruct backwards from any closing endpoint.
  std::vector<Vertex> cycle;
  std::uint32_t mask = full;
  int v = std::countr_zero(closers);
  while (mask != 1) {
    cycle.push_back(v);
    std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << v);
    std::uint32_t candidates = ends[prev_mask] & adj[v];
    if (prev_mask == 1) break;
    v = std::countr_zero(candidates);
    mask = prev_mask;
  }
  cycle.push_back(0);
  std::reverse(cycle.begin(), cycle.end());
  if (!is_hamiltonian_cycle(g, cycle)) return std::nullopt;
  return cycle;
}

std::optional<HamiltonianCycle> extension_dirac_hamiltonian(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("extension_dirac_hamiltonian: order below 3");
  if (!is_connected(g)) throw std::invalid_argument("extension_dirac_hamiltonian: graph must be connected");
  if (g.min_degree() < n / 2)
    throw std::invalid_argument("extension_dirac_hamiltonian: min degree below floor(n/2)");

  if (n % 2 == 1 && detect_exceptional(g) != ExceptionalFamily::NotExceptional) return std::nullopt;

  if (auto c = dirac_hamiltonian(g); c && is_hamiltonian_cycle(g, *c)) return c;
  if (auto c = closure_hamiltonian(g); c && is_hamiltonian_cycle(g, *c)) return c;
  if (auto c = posa_hamiltonian(g, n * n); c && is_hamiltonian_cycle(g, *c)) return c;
  if (n <= 20)
    if (auto c = exact_hamiltonian_cycle(g); c && is_hamiltonian_cycle(g, *c)) return c;
  return std::nullopt;
}

SufficiencyReport sufficiency_predicates(const SimpleGraph& g, const std::vector<int>* bipartition_sides) {
  SufficiencyReport r;
  const int n = g.order();
  if (n == 0) return r;

  r.dirac = n >= 3 && 2 * g.min_degree() >= n;

  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end());
  r.chvatal_degree_sequence = true;
  for (int m = 1; 2 * m < n; ++m) {
    if (deg[m - 1] <= m && deg[n - m - 1] < n - m) {
      r.chvatal_degree_sequence = false;
      break;
    }
  }

  r.nash_williams = is_biconnected(g) && 3 * g.min_degree() >= n + 2 &&
                    g.min_degree() >= independence_number(g);

  std::optional<std::vector<int>> detected;
  const std::vector<int>* sides = bipartition_sides;
  if (!sides) {
    detected = bipartition(g);
    if (detected) sides = &*detected;
  }
  r.moon_moser = false;
  if (sides && sides->size() == static_cast<std::size_t>(n)) {
    int size0 = 0;
    bool proper = true;
    for (Vertex v = 0; v < n && proper; ++v) {
      if ((*sides)[v] == 0) ++size0;
      for (Vertex u = v + 1; u < n; ++u)
        if (g.has_edge(u, v) && (*sides)[u] == (*sides)[v]) { proper = false; break; }
    }
    if (proper && 2 * size0 == n && size0 >= 1) {
      int m = size0;
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = 0; v < n && ok; ++v)
          if ((*sides)[u] == 0 && (*sides)[v] == 1 && !g.has_edge(u, v) && g.degree(u) + g.degree(v) < m + 1)
            ok = false;
      r.moon_moser = ok;
    }
  }
  return r;
}

}  // namespace mrc3
