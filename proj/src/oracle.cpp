#include "mrc3/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrc3 {

namespace {

struct TwoFactorEnumerator {
  int n;
  const std::function<bool(const CycleCover&)>* visit;
  std::vector<char> used;
  std::vector<std::vector<Vertex>> stack;
  bool stopped = false;

  void run() {
    used.assign(n, 0);
    next_cycle(0);
  }

  void next_cycle(int covered) {
    if (stopped) return;
    if (covered == n) {
      CycleCover cover{stack};
      if (!(*visit)(cover)) stopped = true;
      return;
    }
    Vertex anchor = 0;
    while (used[anchor]) ++anchor;
    used[anchor] = 1;
    std::vector<Vertex> path{anchor};
    grow(path, covered + 1);
    used[anchor] = 0;
  }

  void grow(std::vector<Vertex>& path, int covered) {
    if (stopped) return;
    // close: length >= 3, reflection killed by second < last
    if (path.size() >= 3 && path[1] < path.back()) {
      stack.push_back(path);
      next_cycle(covered);
      stack.pop_back();
      if (stopped) return;
    }
    for (Vertex v = path.front() + 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      grow(path, covered + 1);
      path.pop_back();
      used[v] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_two_factors(int n, const std::function<bool(const CycleCover&)>& visit, int cap) {
  if (n < 3 || n > cap) throw std::invalid_argument("enumerate_two_factors: order outside [3, cap]");
  TwoFactorEnumerator e;
  e.n = n;
  e.visit = &visit;
  e.run();
}

std::vector<CycleCover> all_two_factors(int n, int cap) {
  std::vector<CycleCover> out;
  enumerate_two_factors(n, [&](const CycleCover& c) {
    out.push_back(c);
    return true;
  }, cap);
  return out;
}

long long count_two_factors(int n, int cap) {
  long long count = 0;
  enumerate_two_factors(n, [&](const CycleCover&) {
    ++count;
    return true;
  }, cap);
  return count;
}

OracleResult solve_exact(const ColoredCompleteGraph& g, const ReloadCostMatrix& m, int cap) {
  const int n = g.order();
  if (n > cap) throw std::invalid_argument("solve_exact: order above oracle cap");
  OracleResult result;
  bool have = false;
  enumerate_two_factors(n, [&](const CycleCover& cover) {
    ++result.explored;
    std::int64_t cost = cover_cost(g, m, cover);
    if (!have || cost < result.optimal_cost) {
      have = true;
      result.optimal_cost = cost;
      result.witness = cover;
    }
    return cost != 0;  // zero is globally optimal, stop
  });
  return result;
}

namespace {

struct TwoFactorFinder {
  const SimpleGraph* g;
  int n;
  std::vector<char> used;
  std::vector<std::vector<Vertex>> stack;
  std::optional<CycleCover> found;

  bool feasible_degrees() const {
    // every uncovered vertex still needs two uncovered neighbors
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      int free_deg = 0;
      for (Vertex u = 0; u < n; ++u)
        if (u != v && !used[u] && g->has_edge(u, v)) ++free_deg;
      if (free_deg < 2) return false;
    }
    return true;
  }

  bool next_cycle(int covered) {
    if (covered == n) {
      found = CycleCover{stack};
      return true;
    }
    if (!feasible_degrees()) return false;
    Vertex anchor = 0;
    while (used[anchor]) ++anchor;
    used[anchor] = 1;
    std::vector<Vertex> path{anchor};
    bool ok = grow(path, covered + 1);
    used[anchor] = 0;
    return ok;
  }

  bool grow(std::vector<Vertex>& path, int covered) {
    Vertex last = path.back();
    if (path.size() >= 3 && path[1] < last && g->has_edge(last, path.front())) {
      stack.push_back(path);
      if (next_cycle(covered)) return true;
      stack.pop_back();
    }
    for (Vertex v = path.front() + 1; v < n; ++v) {
      if (used[v] || !g->has_edge(last, v)) continue;
      used[v] = 1;
      path.push_back(v);
      if (grow(path, covered + 1)) return true;
      path.pop_back();
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<CycleCover> find_two_factor(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  TwoFactorFinder finder;
  finder.g = &g;
  finder.n = n;
  finder.used.assign(n, 0);
  finder.next_cycle(0);
  return finder.found;
}

MonochromaticSearch exhaustive_monochromatic_exists(const ColoredCompleteGraph& g, int cap) {
  if (g.order() > cap)
    throw std::invalid_argument("exhaustive_monochromatic_exists: order above cap");
  MonochromaticSearch out;
  for (Color c = 0; c < g.num_colors(); ++c) {
    auto sub = g.induced_subgraph(c);
    if (auto cover = find_two_factor(sub)) {
      out.exists = true;
      out.color = c;
      out.witness = canonical(std::move(*cover));
      return out;
    }
  }
  return out;
}

}  // namespace mrc3
