#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mrc3 {

using Vertex = int;
using Color = int;

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;

/// Simple undirected graph on vertices {0..n-1}, dense adjacency matrix.
/// No loops, no multi-edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  static SimpleGraph complete(int n);

  int order() const { return n_; }
  bool has_edge(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const { return degree_[v]; }
  int min_degree() const;
  int max_degree() const;
  long long edge_count() const;
  bool is_complete() const { return edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2; }

  std::vector<Vertex> neighbors(Vertex v) const;
  SimpleGraph complement() const;
  /// Subgraph induced by `verts`, relabeled to 0..|verts|-1 in the given order.
  SimpleGraph induced(const std::vector<Vertex>& verts) const;

  bool operator==(const SimpleGraph& other) const = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> degree_;
};

bool is_connected(const SimpleGraph& g);
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);
/// Components of g - x (x removed), as vertex lists in original labels.
std::vector<std::vector<Vertex>> components_excluding(const SimpleGraph& g, Vertex x);
std::vector<Vertex> articulation_points(const SimpleGraph& g);
/// Connected, n >= 3, and no cut vertex.
bool is_biconnected(const SimpleGraph& g);
/// Side assignment (0/1 per vertex) if bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const SimpleGraph& g);
/// Exact maximum independent set size. Requires n <= 64.
int independence_number(const SimpleGraph& g);

/// Complete graph of order n with a total 2-or-more-edge-coloring.
/// Immutable after construction; operations are pure.
class ColoredCompleteGraph {
 public:
  /// `chi` is a flat n*n matrix; diagonal entries are ignored, off-diagonal
  /// entries must be symmetric and in [0, num_colors).
  ColoredCompleteGraph(int n, int num_colors, std::vector<Color> chi);

  static ColoredCompleteGraph monochromatic(int n, Color c = kRed, int num_colors = 2);

  int order() const { return n_; }
  int num_colors() const { return k_; }
  Color color(Vertex u, Vertex v) const;
  /// |c(v)|: number of edges at v with color c.
  int color_degree(Vertex v, Color c) const;
  /// Subgraph spanned by the edges of color c.
  SimpleGraph induced_subgraph(Color c) const;

  bool operator==(const ColoredCompleteGraph& other) const = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Color> chi_;
};

/// Mutable staging area for building colorings; validated on build().
struct ColoringBuilder {
  int n = 0;
  int num_colors = 2;
  std::vector<Color> chi;  // n*n, -1 where unset

  ColoringBuilder() = default;
  ColoringBuilder(int n_, int k_) : n(n_), num_colors(k_), chi(static_cast<std::size_t>(n_) * n_, -1) {}
  explicit ColoringBuilder(const ColoredCompleteGraph& g);

  Color get(Vertex u, Vertex v) const { return chi[static_cast<std::size_t>(u) * n + v]; }
  void set(Vertex u, Vertex v, Color c) {
    chi[static_cast<std::size_t>(u) * n + v] = c;
    chi[static_cast<std::size_t>(v) * n + u] = c;
  }
  ColoredCompleteGraph build() const { return ColoredCompleteGraph(n, num_colors, chi); }
};

/// Vertex-disjoint cycles, each stored as an open vertex sequence with an
/// implicit closing edge.
struct CycleCover {
  std::vector<std::vector<Vertex>> cycles;
  bool operator==(const CycleCover& other) const = default;
};

/// Min vertex first, lexicographically smaller orientation.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);
CycleCover canonical(CycleCover cover);

struct CoverCheck {
  bool ok = false;
  std::string reason;  // first violated invariant, empty when ok
};

/// True iff `cover` partitions {0..n-1} into cycles of length >= 3.
CoverCheck validate_cover(int n, const CycleCover& cover);

/// Per-cycle color, or nullopt for a mixed cycle. Throws on invalid cover.
std::vector<std::optional<Color>> cycle_colors(const ColoredCompleteGraph& g, const CycleCover& cover);
/// The single color shared by all edges of all cycles, if any.
std::optional<Color> monochromatic_color(const ColoredCompleteGraph& g, const CycleCover& cover);

}  // namespace mrc3
