#include "minorforge/random.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace minorforge {

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  constexpr std::uint64_t kScale = std::uint64_t{1} << 53;
  const std::uint64_t threshold =
      p >= 1.0 ? kScale : static_cast<std::uint64_t>(std::floor(std::ldexp(p, 53)));

  Graph g(n);
  std::mt19937_64 rng(seed);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if ((rng() >> 11) < threshold) g.add_edge(u, v);
  return g;
}

}  // namespace minorforge
