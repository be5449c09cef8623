#include "mrc3/reload.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mrc3 {

ReloadCostMatrix::ReloadCostMatrix(int k, std::vector<std::int64_t> rho, bool strict_positive)
    : k_(k), rho_(std::move(rho)) {
  if (k < 1) throw std::invalid_argument("ReloadCostMatrix: need at least one color");
  if (rho_.size() != static_cast<std::size_t>(k) * k)
    throw std::invalid_argument("ReloadCostMatrix: matrix has wrong size");
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      std::int64_t v = rho_[static_cast<std::size_t>(a) * k + b];
      if (v < 0) throw std::invalid_argument("ReloadCostMatrix: negative cost");
      if (a == b && v != 0) throw std::invalid_argument("ReloadCostMatrix: nonzero diagonal");
      if (a != b && strict_positive && v == 0)
        throw std::invalid_argument("ReloadCostMatrix: zero off-diagonal in strict mode");
    }
  }
}

ReloadCostMatrix ReloadCostMatrix::strict(int num_colors, std::vector<std::int64_t> rho) {
  return ReloadCostMatrix(num_colors, std::move(rho), true);
}

ReloadCostMatrix ReloadCostMatrix::permissive(int num_colors, std::vector<std::int64_t> rho) {
  return ReloadCostMatrix(num_colors, std::move(rho), false);
}

ReloadCostMatrix ReloadCostMatrix::uniform(int num_colors, std::int64_t off_diagonal) {
  std::vector<std::int64_t> rho(static_cast<std::size_t>(num_colors) * num_colors, off_diagonal);
  for (int c = 0; c < num_colors; ++c) rho[static_cast<std::size_t>(c) * num_colors + c] = 0;
  return ReloadCostMatrix(num_colors, std::move(rho), off_diagonal > 0);
}

std::int64_t ReloadCostMatrix::cost(Color a, Color b) const {
  if (a < 0 || b < 0 || a >= k_ || b >= k_)
    throw std::invalid_argument("ReloadCostMatrix::cost: color out of range");
  return rho_[static_cast<std::size_t>(a) * k_ + b];
}

std::int64_t ReloadCostMatrix::max_cost() const {
  return *std::max_element(rho_.begin(), rho_.end());
}

bool ReloadCostMatrix::is_symmetric() const {
  for (int a = 0; a < k_; ++a)
    for (int b = a + 1; b < k_; ++b)
      if (cost(a, b) != cost(b, a)) return false;
  return true;
}

bool ReloadCostMatrix::satisfies_triangle() const {
  for (int a = 0; a < k_; ++a)
    for (int b = 0; b < k_; ++b)
      for (int c = 0; c < k_; ++c)
        if (cost(a, c) > checked_add(cost(a, b), cost(b, c))) return false;
  return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("reload cost accumulation overflow");
  return out;
}

namespace {

void check_walk(const ColoredCompleteGraph& g, const std::vector<Vertex>& seq, std::size_t min_len,
                const char* what) {
  if (seq.size() < min_len) throw std::invalid_argument(std::string(what) + ": too few vertices");
  for (Vertex v : seq)
    if (v < 0 || v >= g.order()) throw std::invalid_argument(std::string(what) + ": vertex out of range");
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[i - 1])
      throw std::invalid_argument(std::string(what) + ": repeated consecutive vertices");
}

}  // namespace

std::int64_t path_cost(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                       const std::vector<Vertex>& path) {
  check_walk(g, path, 2, "path_cost");
  std::int64_t total = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    Color in = g.color(path[i - 1], path[i]);
    Color out = g.color(path[i], path[i + 1]);
    total = checked_add(total, m.cost(in, out));
  }
  return total;
}

std::int64_t cycle_cost(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                        const std::vector<Vertex>& cycle) {
  check_walk(g, cycle, 3, "cycle_cost");
  if (cycle.front() == cycle.back()) throw std::invalid_argument("cycle_cost: repeated consecutive vertices");
  std::int64_t total = 0;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    Color in = g.color(cycle[(i + n - 1) % n], cycle[i]);
    Color out = g.color(cycle[i], cycle[(i + 1) % n]);
    total = checked_add(total, m.cost(in, out));
  }
  return total;
}

std::int64_t cover_cost(const ColoredCompleteGraph& g, const ReloadCostMatrix& m,
                        const CycleCover& cover) {
  auto check = validate_cover(g.order(), cover);
  if (!check.ok) throw std::invalid_argument("cover_cost: invalid cover: " + check.reason);
  std::int64_t total = 0;
  for (const auto& cyc : cover.cycles) total = checked_add(total, cycle_cost(g, m, cyc));
  return total;
}

}  // namespace mrc3
