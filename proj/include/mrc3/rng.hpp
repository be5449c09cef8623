#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mrc3 {

/// Deterministic RNG shared by the generators and the experiment harness.
/// mt19937_64 is fully specified by the C++ standard, so a fixed seed
/// reproduces bit-identically across platforms. Bounded draws use modulo
/// reduction; the bias is negligible at the bounds used here and keeps the
/// stream portable (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool coin() { return (engine_() & 1) != 0; }
  /// True with probability num/denom.
  bool chance(std::uint64_t num, std::uint64_t denom) { return below(denom) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mrc3
