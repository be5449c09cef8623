#include "mrc3/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace mrc3 {

bool Instance::is_complete() const {
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge_color(u, v) < 0) return false;
  return true;
}

ColoredCompleteGraph Instance::to_complete() const {
  if (!is_complete()) throw ParseError("instance is not a complete graph");
  return ColoredCompleteGraph(n, num_colors, edge_colors);
}

GeneralInstance Instance::to_general() const {
  GeneralInstance inst{SimpleGraph(n), std::vector<Color>(static_cast<std::size_t>(n) * n, -1), costs};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge_color(u, v) >= 0) inst.set_edge(u, v, edge_color(u, v));
  inst.validate();
  return inst;
}

namespace {

std::string strip(const std::string& line) {
  std::string out = line;
  auto hash = out.find('#');
  if (hash != std::string::npos) out.erase(hash);
  auto begin = out.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = out.find_last_not_of(" \t\r\n");
  return out.substr(begin, end - begin + 1);
}

bool next_line(std::istream& in, std::string& out) {
  std::string raw;
  while (std::getline(in, raw)) {
    out = strip(raw);
    if (!out.empty()) return true;
  }
  return false;
}

}  // namespace

Instance parse_instance(std::istream& in, bool allow_asymmetric) {
  std::string line;
  if (!next_line(in, line) || line != "mrc3 v1") throw ParseError("expected header 'mrc3 v1'");

  Instance inst;
  if (!next_line(in, line)) throw ParseError("missing size line");
  {
    std::istringstream ss(line);
    std::string kw_n, kw_colors;
    if (!(ss >> kw_n >> inst.n >> kw_colors >> inst.num_colors) || kw_n != "n" || kw_colors != "colors")
      throw ParseError("malformed size line: " + line);
    if (inst.n < 1) throw ParseError("order must be positive");
    if (inst.num_colors < 1) throw ParseError("color count must be positive");
  }
  inst.edge_colors.assign(static_cast<std::size_t>(inst.n) * inst.n, -1);

  const int k = inst.num_colors;
  std::vector<std::int64_t> rho(static_cast<std::size_t>(k) * k, -1);
  std::vector<char> explicit_entry(static_cast<std::size_t>(k) * k, 0);
  for (int c = 0; c < k; ++c) rho[static_cast<std::size_t>(c) * k + c] = 0;

  while (next_line(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "e") {
      int u, v, c;
      if (!(ss >> u >> v >> c)) throw ParseError("malformed edge line: " + line);
      if (u < 0 || v < 0 || u >= inst.n || v >= inst.n || u == v)
        throw ParseError("edge vertex out of range: " + line);
      if (c < 0 || c >= k) throw ParseError("edge color out of range: " + line);
      if (inst.edge_color(u, v) >= 0) throw ParseError("duplicate edge: " + line);
      inst.edge_colors[static_cast<std::size_t>(u) * inst.n + v] = c;
      inst.edge_colors[static_cast<std::size_t>(v) * inst.n + u] = c;
    } else if (tag == "r") {
      int a, b;
      std::int64_t cost;
      if (!(ss >> a >> b >> cost)) throw ParseError("malformed reload line: " + line);
      if (a < 0 || b < 0 || a >= k || b >= k) throw ParseError("reload color out of range: " + line);
      if (cost < 0) throw ParseError("negative reload cost: " + line);
      if (a == b) {
        if (cost != 0) throw ParseError("nonzero reload diagonal: " + line);
        continue;
      }
      auto& fwd = rho[static_cast<std::size_t>(a) * k + b];
      auto& rev = rho[static_cast<std::size_t>(b) * k + a];
      auto& fwd_explicit = explicit_entry[static_cast<std::size_t>(a) * k + b];
      if (allow_asymmetric) {
        if (fwd_explicit && fwd != cost) throw ParseError("conflicting reload cost: " + line);
        fwd = cost;
        fwd_explicit = 1;
      } else {
        if ((fwd >= 0 && fwd != cost) || (rev >= 0 && rev != cost))
          throw ParseError("asymmetric reload cost without asymmetric mode: " + line);
        fwd = rev = cost;
        fwd_explicit = explicit_entry[static_cast<std::size_t>(b) * k + a] = 1;
      }
    } else {
      throw ParseError("unknown record: " + line);
    }
  }

  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      auto& fwd = rho[static_cast<std::size_t>(a) * k + b];
      if (fwd < 0 && allow_asymmetric) fwd = rho[static_cast<std::size_t>(b) * k + a];  // symmetric default
      if (fwd < 0)
        throw ParseError("missing reload cost for color pair " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  inst.costs = ReloadCostMatrix::permissive(k, std::move(rho));
  return inst;
}

Instance parse_instance_file(const std::string& path, bool allow_asymmetric) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_instance(in, allow_asymmetric);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "mrc3 v1\n";
  out << "n " << inst.n << " colors " << inst.num_colors << "\n";
  for (Vertex u = 0; u < inst.n; ++u)
    for (Vertex v = u + 1; v < inst.n; ++v)
      if (inst.edge_color(u, v) >= 0)
        out << "e " << u << " " << v << " " << inst.edge_color(u, v) << "\n";
  for (int a = 0; a < inst.num_colors; ++a)
    for (int b = a + 1; b < inst.num_colors; ++b) {
      out << "r " << a << " " << b << " " << inst.costs.cost(a, b) << "\n";
      if (inst.costs.cost(a, b) != inst.costs.cost(b, a))
        out << "r " << b << " " << a << " " << inst.costs.cost(b, a) << "\n";
    }
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_instance(out, inst);
}

Instance make_instance(const ColoredCompleteGraph& g, const ReloadCostMatrix& costs) {
  Instance inst;
  inst.n = g.order();
  inst.num_colors = std::max(g.num_colors(), costs.num_colors());
  inst.edge_colors.assign(static_cast<std::size_t>(inst.n) * inst.n, -1);
  for (Vertex u = 0; u < inst.n; ++u)
    for (Vertex v = u + 1; v < inst.n; ++v) {
      inst.edge_colors[static_cast<std::size_t>(u) * inst.n + v] = g.color(u, v);
      inst.edge_colors[static_cast<std::size_t>(v) * inst.n + u] = g.color(u, v);
    }
  inst.costs = costs;
  return inst;
}

CycleCover parse_cover(std::istream& in) {
  CycleCover cover;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<Vertex> cycle;
    Vertex v;
    while (ss >> v) cycle.push_back(v);
    if (!ss.eof()) throw ParseError("malformed cover line: " + line);
    cover.cycles.push_back(std::move(cycle));
  }
  return cover;
}

CycleCover parse_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_cover(in);
}

void write_cover(std::ostream& out, const CycleCover& cover) {
  CycleCover canon = canonical(cover);
  for (const auto& cyc : canon.cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
    out << "\n";
  }
}

void write_cover_file(const std::string& path, const CycleCover& cover) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_cover(out, cover);
}

}  // namespace mrc3
