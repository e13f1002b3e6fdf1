#include "minorforge/minor_model.hpp"

#include <bit>

#include "minorforge/invariants.hpp"

namespace minorforge {

Verdict verify_minor_model(const Graph& g, const MinorModel& m) {
  const auto& sets = m.branch_sets;
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return Verdict::fail("branch set " + std::to_string(i) + " is empty");
    for (Vertex v : sets[i]) {
      if (v >= g.order())
        return Verdict::fail("branch set " + std::to_string(i) + " contains vertex " +
                             std::to_string(v) + " outside the graph");
      if (owner[v] >= 0)
        return Verdict::fail("vertex " + std::to_string(v) + " lies in branch sets " +
                             std::to_string(owner[v]) + " and " + std::to_string(i));
      owner[v] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!induces_connected(g, sets[i]))
      return Verdict::fail("branch set " + std::to_string(i) + " is not connected");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool joined = false;
      for (Vertex u : sets[i]) {
        for (Vertex v : sets[j]) {
          if (g.has_edge(u, v)) {
            joined = true;
            break;
          }
        }
        if (joined) break;
      }
      if (!joined)
        return Verdict::fail("branch sets " + std::to_string(i) + " and " + std::to_string(j) +
                             " not adjacent");
    }
  }
  return Verdict::pass();
}

MinorModel lift_model(const MinorModel& m, const std::vector<Vertex>& to_host) {
  MinorModel out;
  out.branch_sets.reserve(m.branch_sets.size());
  for (const auto& set : m.branch_sets) {
    std::vector<Vertex> lifted;
    lifted.reserve(set.size());
    for (Vertex v : set) lifted.push_back(to_host.at(v));
    out.branch_sets.emplace_back(std::move(lifted));
  }
  return out;
}

namespace {

// Per-step clique budget; the heuristic keeps whatever clique it certifies.
constexpr NodeBudget kGreedyCliqueBudget{.nodes = 200'000};

}  // namespace

MinorModel greedy_contraction_model(const Graph& g) {
  Graph current = g;
  std::vector<std::vector<Vertex>> bags(g.order());
  for (Vertex v = 0; v < g.order(); ++v) bags[v] = {v};

  MinorModel best;
  while (current.order() > 0) {
    const ExtremalSet clique = clique_number(current, kGreedyCliqueBudget);
    if (clique.size > best.order()) {
      best.branch_sets.clear();
      for (Vertex v : clique.witness) best.branch_sets.emplace_back(bags[v]);
    }

    Vertex pick_u = kNoVertex;
    Vertex pick_v = kNoVertex;
    std::size_t pick_common = 0;
    for (Vertex u = 0; u < current.order(); ++u) {
      const auto row_u = current.row(u);
      for (Vertex v : current.neighbors(u)) {
        if (v <= u) continue;
        const auto row_v = current.row(v);
        std::size_t common = 0;
        for (std::size_t k = 0; k < row_u.size(); ++k)
          common += static_cast<std::size_t>(std::popcount(row_u[k] & row_v[k]));
        if (pick_u == kNoVertex || common > pick_common) {
          pick_u = u;
          pick_v = v;
          pick_common = common;
        }
      }
    }
    if (pick_u == kNoVertex) break;

    current = contract_set(current, VertexSet{pick_u, pick_v});
    bags[pick_u].insert(bags[pick_u].end(), bags[pick_v].begin(), bags[pick_v].end());
    bags.erase(bags.begin() + pick_v);
  }
  return best;
}

}  // namespace minorforge
