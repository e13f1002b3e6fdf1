#include "minorforge/invariants.hpp"

namespace minorforge {

bool is_claw(const Graph& g, const Claw& c) {
  const auto n = g.order();
  if (c.center >= n) return false;
  for (Vertex leaf : c.leaves)
    if (leaf >= n || leaf == c.center || !g.has_edge(c.center, leaf)) return false;
  if (!(c.leaves[0] < c.leaves[1] && c.leaves[1] < c.leaves[2])) return false;
  return !g.has_edge(c.leaves[0], c.leaves[1]) && !g.has_edge(c.leaves[0], c.leaves[2]) &&
         !g.has_edge(c.leaves[1], c.leaves[2]);
}

std::optional<Claw> find_claw(const Graph& g) {
  for (Vertex center = 0; center < g.order(); ++center) {
    const auto nbrs = g.neighbors(center);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
          if (!g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]))
            return Claw{center, {nbrs[i], nbrs[j], nbrs[k]}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace minorforge
