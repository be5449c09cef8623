#include "mrc3/mcca.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrc3/hamiltonicity.hpp"

namespace mrc3 {

const char* to_string(MccaBranch b) {
  switch (b) {
    case MccaBranch::Dirac: return "dirac";
    case MccaBranch::Closure: return "closure";
    case MccaBranch::BipartiteComplement: return "bipartite_complement";
    case MccaBranch::Extension: return "extension";
    case MccaBranch::CutVertexUnequal: return "cut_vertex_unequal";
    case MccaBranch::CutVertexEqual: return "cut_vertex_equal";
    case MccaBranch::None: return "none";
  }
  return "?";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::CoverFound: return "cover_found";
    case SolveStatus::OracleSuggested: return "oracle_suggested";
    case SolveStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool cover_is_sound(const ColoredCompleteGraph& g, const CycleCover& cover, Color expect) {
  if (!validate_cover(g.order(), cover).ok) return false;
  auto mono = monochromatic_color(g, cover);
  return mono && *mono == expect;
}

// Exact recognition of K_{ceil(n/2), floor(n/2)} by degree classes: for odd
// n the two part degrees differ, the high-degree class is the small part.
struct BipartiteSplit {
  std::vector<Vertex> high_degree;  // degree ceil(n/2), i.e. the floor(n/2)-sized part
  std::vector<Vertex> low_degree;   // degree floor(n/2), i.e. the ceil(n/2)-sized part
};

std::optional<BipartiteSplit> complete_bipartite_split(const SimpleGraph& g) {
  const int n = g.order();
  const int lo = n / 2, hi = (n + 1) / 2;
  if (lo == hi) return std::nullopt;  // even order never reaches this branch
  BipartiteSplit split;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == hi) split.high_degree.push_back(v);
    else if (g.degree(v) == lo) split.low_degree.push_back(v);
    else return std::nullopt;
  }
  if (split.high_degree.size() != static_cast<std::size_t>(lo)) return std::nullopt;
  if (split.low_degree.size() != static_cast<std::size_t>(hi)) return std::nullopt;
  for (Vertex u : split.high_degree)
    for (Vertex v : split.low_degree)
      if (!g.has_edge(u, v)) return std::nullopt;
  for (std::size_t i = 0; i < split.high_degree.size(); ++i)
    for (std::size_t j = i + 1; j < split.high_degree.size(); ++j)
      if (g.has_edge(split.high_degree[i], split.high_degree[j])) return std::nullopt;
  for (std::size_t i = 0; i < split.low_degree.size(); ++i)
    for (std::size_t j = i + 1; j < split.low_degree.size(); ++j)
      if (g.has_edge(split.low_degree[i], split.low_degree[j])) return std::nullopt;
  return split;
}

// Maps a cycle found in an induced subgraph back to original labels.
std::vector<Vertex> map_back(const std::vector<Vertex>& cycle, const std::vector<Vertex>& verts) {
  std::vector<Vertex> out;
  out.reserve(cycle.size());
  for (Vertex v : cycle) out.push_back(verts[v]);
  return out;
}

bool cycle_edges_present(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

struct BranchOutcome {
  CycleCover cover;
  MccaBranch branch = MccaBranch::None;
  Color cover_color = -1;
};

std::optional<BranchOutcome> try_color(const ColoredCompleteGraph& g, Color color,
                                       const SimpleGraph& sub, MccaColorAttempt& attempt) {
  const int n = g.order();
  const Color other = (color == kRed) ? kBlue : kRed;
  const int delta = sub.min_degree();

  // Dirac bound delta >= n/2
  if (2 * delta >= n) {
    if (auto cycle = dirac_hamiltonian(sub)) {
      CycleCover cover = canonical(CycleCover{{*cycle}});
      if (cover_is_sound(g, cover, color)) return BranchOutcome{cover, MccaBranch::Dirac, color};
    }
  }

  // Complete closure
  if (closure(sub).is_complete()) {
    if (auto cycle = closure_hamiltonian(sub)) {
      CycleCover cover = canonical(CycleCover{{*cycle}});
      if (cover_is_sound(g, cover, color)) return BranchOutcome{cover, MccaBranch::Closure, color};
    }
  }

  if (delta == n / 2) {
    if (auto split = complete_bipartite_split(sub)) {
      // The two parts are cliques in the other color; list each part in
      // index order.
      if (split->high_degree.size() >= 3 && split->low_degree.size() >= 3) {
        CycleCover cover = canonical(CycleCover{{split->high_degree, split->low_degree}});
        if (cover_is_sound(g, cover, other))
          return BranchOutcome{cover, MccaBranch::BipartiteComplement, other};
      }
    } else if (is_connected(sub)) {
      if (auto cycle = extension_dirac_hamiltonian(sub)) {
        CycleCover cover = canonical(CycleCover{{*cycle}});
        if (cover_is_sound(g, cover, color)) return BranchOutcome{cover, MccaBranch::Extension, color};
      }
    }
  }

  // Cut-vertex constructions, guarded by floor(n/2) >= 4.
  if (attempt.has_cut_vertex && n / 2 >= 4) {
    Vertex x = articulation_points(sub).front();  // lowest index
    auto comps = components_excluding(sub, x);
    if (comps.size() == 2) {
      std::vector<Vertex> a = comps[0], b = comps[1];
      if (a.size() > b.size()) std::swap(a, b);  // |b| >= |a|
      if (b.size() > a.size()) {
        // smaller component plus x forms one cycle, Dirac handles the rest
        if (a.size() >= 2 && b.size() >= 3) {
          std::vector<Vertex> c1 = a;
          c1.push_back(x);
          if (cycle_edges_present(sub, c1)) {
            if (auto hb = dirac_hamiltonian(sub.induced(b))) {
              CycleCover cover = canonical(CycleCover{{c1, map_back(*hb, b)}});
              if (cover_is_sound(g, cover, color))
                return BranchOutcome{cover, MccaBranch::CutVertexUnequal, color};
            }
          }
        }
      } else if (a.size() >= 3) {
        auto ha = dirac_hamiltonian(sub.induced(a));
        auto hb = dirac_hamiltonian(sub.induced(b));
        if (ha && hb) {
          std::vector<Vertex> ca = map_back(*ha, a);
          std::vector<Vertex> cb = map_back(*hb, b);
          int adj_a = 0, adj_b = 0;
          for (Vertex v : a) adj_a += sub.has_edge(x, v) ? 1 : 0;
          for (Vertex v : b) adj_b += sub.has_edge(x, v) ? 1 : 0;
          // x is spliced into the side it has more neighbors in; ties go to
          // the component holding the lowest-indexed vertex.
          bool splice_a = adj_a > adj_b;
          if (adj_a == adj_b) {
            Vertex lowest_a = *std::min_element(a.begin(), a.end());
            Vertex lowest_b = *std::min_element(b.begin(), b.end());
            splice_a = lowest_a < lowest_b;
          }
          std::vector<Vertex>& host = splice_a ? ca : cb;
          const std::size_t m = host.size();
          for (std::size_t j = 0; j < m; ++j) {
            if (sub.has_edge(x, host[j]) && sub.has_edge(x, host[(j + 1) % m])) {
              std::vector<Vertex> spliced(host.begin(), host.begin() + j + 1);
              spliced.push_back(x);
              spliced.insert(spliced.end(), host.begin() + j + 1, host.end());
              CycleCover cover = canonical(CycleCover{{spliced, splice_a ? cb : ca}});
              if (cover_is_sound(g, cover, color))
                return BranchOutcome{cover, MccaBranch::CutVertexEqual, color};
              break;
            }
          }
        }
      }
    }
  }

  return std::nullopt;
}

}  // namespace

MccaResult mcca(const ColoredCompleteGraph& g) {
  if (g.num_colors() != 2) throw std::invalid_argument("mcca: input must use exactly 2 colors");
  MccaResult result;
  for (Color color : {kRed, kBlue}) {
    SimpleGraph sub = g.induced_subgraph(color);
    MccaColorAttempt attempt;
    attempt.color = color;
    attempt.min_degree = sub.min_degree();
    attempt.max_degree = sub.max_degree();
    attempt.has_cut_vertex = !articulation_points(sub).empty();
    attempt.biconnected = is_biconnected(sub);
    if (g.order() >= 3) {
      if (auto outcome = try_color(g, color, sub, attempt)) {
        attempt.branch = outcome->branch;
        result.trace.attempts.push_back(attempt);
        result.trace.terminal = outcome->branch;
        result.trace.cover_color = outcome->cover_color;
        result.cover = std::move(outcome->cover);
        return result;
      }
    }
    result.trace.attempts.push_back(attempt);
  }
  result.trace.terminal = MccaBranch::None;
  return result;
}

SolveResult min_reload_cycle_cover(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                                   int oracle_cap) {
  SolveResult out;
  MccaResult r = mcca(g);
  out.trace = std::move(r.trace);
  if (r.cover) {
    out.status = SolveStatus::CoverFound;
    out.cost = cover_cost(g, m, *r.cover);  // zero by construction
    out.cover = std::move(r.cover);
    return out;
  }
  out.status = (g.order() <= oracle_cap) ? SolveStatus::OracleSuggested : SolveStatus::Inconclusive;
  return out;
}

}  // namespace mrc3
