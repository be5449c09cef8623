#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mrc3/graph.hpp"
#include "mrc3/reduction.hpp"
#include "mrc3/reload.hpp"

namespace mrc3 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Line-oriented instance file, `#` starts a comment:
///   mrc3 v1
///   n <order> colors <k>
///   e <u> <v> <color>        one line per edge
///   r <c1> <c2> <cost>       one line per unordered color pair
/// Complete instances carry all n(n-1)/2 edges; general instances a subset.
/// Reload records are symmetric by default; giving both directions with
/// different values is an error unless asymmetric mode is enabled.
struct Instance {
  int n = 0;
  int num_colors = 0;
  std::vector<Color> edge_colors;  // n*n flat, -1 absent
  ReloadCostMatrix costs = ReloadCostMatrix::uniform(1, 0);

  Color edge_color(Vertex u, Vertex v) const {
    return edge_colors[static_cast<std::size_t>(u) * n + v];
  }
  bool is_complete() const;
  ColoredCompleteGraph to_complete() const;  // throws ParseError when incomplete
  GeneralInstance to_general() const;
};

Instance parse_instance(std::istream& in, bool allow_asymmetric = false);
Instance parse_instance_file(const std::string& path, bool allow_asymmetric = false);
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

Instance make_instance(const ColoredCompleteGraph& g, const ReloadCostMatrix& costs);

/// Cover file: one cycle per line, space-separated vertex ids, canonical
/// rotation and orientation.
CycleCover parse_cover(std::istream& in);
CycleCover parse_cover_file(const std::string& path);
void write_cover(std::ostream& out, const CycleCover& cover);
void write_cover_file(const std::string& path, const CycleCover& cover);

}  // namespace mrc3
