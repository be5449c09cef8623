#include "mrc3/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace mrc3 {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw std::invalid_argument("SimpleGraph: negative order");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  degree_.assign(n, 0);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void SimpleGraph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (adj_[index(u, v)]) return;
  adj_[index(u, v)] = adj_[index(v, u)] = 1;
  ++degree_[u];
  ++degree_[v];
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!adj_[index(u, v)]) return;
  adj_[index(u, v)] = adj_[index(v, u)] = 0;
  --degree_[u];
  --degree_[v];
}

int SimpleGraph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

int SimpleGraph::max_degree() const {
  if (n_ == 0) return 0;
  return *std::max_element(degree_.begin(), degree_.end());
}

long long SimpleGraph::edge_count() const {
  long long sum = 0;
  for (int d : degree_) sum += d;
  return sum / 2;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for (Vertex u = 0; u < n_; ++u)
    if (adj_[index(v, u)]) out.push_back(u);
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<Vertex>& verts) const {
  SimpleGraph g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

namespace {

void flood(const SimpleGraph& g, Vertex start, std::vector<int>& comp, int id, Vertex skip) {
  std::vector<Vertex> stack{start};
  comp[start] = id;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u == skip || comp[u] >= 0 || !g.has_edge(v, u)) continue;
      comp[u] = id;
      stack.push_back(u);
    }
  }
}

std::vector<std::vector<Vertex>> grouped_components(const SimpleGraph& g, Vertex skip) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == skip || comp[v] >= 0) continue;
    flood(g, v, comp, next++, skip);
  }
  std::vector<std::vector<Vertex>> out(next);
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != skip) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
  if (g.order() <= 1) return true;
  return grouped_components(g, -1).size() == 1;
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  return grouped_components(g, -1);
}

std::vector<std::vector<Vertex>> components_excluding(const SimpleGraph& g, Vertex x) {
  return grouped_components(g, x);
}

std::vector<Vertex> articulation_points(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!g.has_edge(v, u)) continue;
      if (disc[u] < 0) {
        ++children;
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (parent >= 0 && low[u] >= disc[v]) is_cut[v] = 1;
      } else if (u != parent) {
        low[v] = std::min(low[v], disc[u]);
      }
    }
    if (parent < 0 && children > 1) is_cut[v] = 1;
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

bool is_biconnected(const SimpleGraph& g) {
  return g.order() >= 3 && is_connected(g) && articulation_points(g).empty();
}

std::optional<std::vector<int>> bipartition(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      for (Vertex u = 0; u < n; ++u) {
        if (!g.has_edge(v, u)) continue;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

int independence_number(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 64) throw std::invalid_argument("independence_number: order above 64");
  if (n == 0) return 0;
  std::vector<std::uint64_t> nb(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) nb[u] |= std::uint64_t{1} << v;
  int best = 0;
  std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t avail, int cur) {
    if (cur + std::popcount(avail) <= best) return;
    if (avail == 0) {
      best = std::max(best, cur);
      return;
    }
    // branch on a vertex of maximum remaining degree
    int pick = -1, pick_deg = -1;
    for (std::uint64_t m = avail; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(nb[v] & avail);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    rec(avail & ~(nb[pick] | (std::uint64_t{1} << pick)), cur + 1);
    rec(avail & ~(std::uint64_t{1} << pick), cur);
  };
  rec(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1), 0);
  return best;
}

ColoredCompleteGraph::ColoredCompleteGraph(int n, int num_colors, std::vector<Color> chi)
    : n_(n), k_(num_colors), chi_(std::move(chi)) {
  if (n < 1) throw std::invalid_argument("ColoredCompleteGraph: order must be positive");
  if (k_ < 1) throw std::invalid_argument("ColoredCompleteGraph: need at least one color");
  if (chi_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("ColoredCompleteGraph: color matrix has wrong size");
  for (Vertex u = 0; u < n; ++u) {
    chi_[static_cast<std::size_t>(u) * n + u] = -1;
    for (Vertex v = u + 1; v < n; ++v) {
      Color c = chi_[static_cast<std::size_t>(u) * n + v];
      if (c < 0 || c >= k_)
        throw std::invalid_argument("ColoredCompleteGraph: coloring is not total");
      if (c != chi_[static_cast<std::size_t>(v) * n + u])
        throw std::invalid_argument("ColoredCompleteGraph: coloring is not symmetric");
    }
  }
}

ColoredCompleteGraph ColoredCompleteGraph::monochromatic(int n, Color c, int num_colors) {
  std::vector<Color> chi(static_cast<std::size_t>(n) * n, c);
  return ColoredCompleteGraph(n, num_colors, std::move(chi));
}

Color ColoredCompleteGraph::color(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw std::invalid_argument("color: invalid vertex pair");
  return chi_[static_cast<std::size_t>(u) * n_ + v];
}

int ColoredCompleteGraph::color_degree(Vertex v, Color c) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("color_degree: vertex out of range");
  if (c < 0 || c >= k_) throw std::invalid_argument("color_degree: color out of range");
  int count = 0;
  for (Vertex u = 0; u < n_; ++u)
    if (u != v && chi_[static_cast<std::size_t>(v) * n_ + u] == c) ++count;
  return count;
}

SimpleGraph ColoredCompleteGraph::induced_subgraph(Color c) const {
  if (c < 0 || c >= k_) throw std::invalid_argument("induced_subgraph: color out of range");
  SimpleGraph g(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (chi_[static_cast<std::size_t>(u) * n_ + v] == c) g.add_edge(u, v);
  return g;
}

ColoringBuilder::ColoringBuilder(const ColoredCompleteGraph& g)
    : n(g.order()), num_colors(g.num_colors()), chi(static_cast<std::size_t>(g.order()) * g.order(), -1) {
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) set(u, v, g.color(u, v));
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.empty()) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  std::vector<Vertex> reversed(cycle.size());
  reversed[0] = cycle[0];
  for (std::size_t i = 1; i < cycle.size(); ++i) reversed[i] = cycle[cycle.size() - i];
  return std::min(cycle, reversed);
}

CycleCover canonical(CycleCover cover) {
  for (auto& cyc : cover.cycles) cyc = canonical_cycle(std::move(cyc));
  std::sort(cover.cycles.begin(), cover.cycles.end());
  return cover;
}

CoverCheck validate_cover(int n, const CycleCover& cover) {
  for (const auto& cyc : cover.cycles)
    if (cyc.size() < 3) return {false, "cycle shorter than 3"};
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  for (const auto& cyc : cover.cycles) {
    std::vector<char> in_cycle(n, 0);
    for (Vertex v : cyc) {
      if (v < 0 || v >= n) return {false, "vertex out of range"};
      if (in_cycle[v]) return {false, "repeated vertex in cycle"};
      in_cycle[v] = 1;
      if (seen[v]) return {false, "not vertex-disjoint"};
      seen[v] = 1;
    }
    total += cyc.size();
  }
  if (total != static_cast<std::size_t>(n)) return {false, "does not cover all vertices"};
  return {true, ""};
}

std::vector<std::optional<Color>> cycle_colors(const ColoredCompleteGraph& g, const CycleCover& cover) {
  auto check = validate_cover(g.order(), cover);
  if (!check.ok) throw std::invalid_argument("cycle_colors: invalid cover: " + check.reason);
  std::vector<std::optional<Color>> out;
  out.reserve(cover.cycles.size());
  for (const auto& cyc : cover.cycles) {
    Color first = g.color(cyc[0], cyc[1]);
    bool mono = true;
    for (std::size_t i = 1; i < cyc.size() && mono; ++i)
      if (g.color(cyc[i], cyc[(i + 1) % cyc.size()]) != first) mono = false;
    out.push_back(mono ? std::optional<Color>(first) : std::nullopt);
  }
  return out;
}

std::optional<Color> monochromatic_color(const ColoredCompleteGraph& g, const CycleCover& cover) {
  auto per_cycle = cycle_colors(g, cover);
  if (per_cycle.empty()) return std::nullopt;
  for (const auto& c : per_cycle)
    if (!c || *c != *per_cycle[0]) return std::nullopt;
  return per_cycle[0];
}

}  // namespace mrc3
