#pragma once

// Claw-seeded connected dominating sets.
//
// Starting from D_0 = V(claw), each step takes the lowest vertex v at
// distance exactly 2 from D_i, the lowest u adjacent to v and to D_i, and
// adds both. v has no neighbour in D_i, so the claw leaves together with the
// added v's stay stable; after k steps |D| = 2k + 4 and the witness S has
// k + 3 vertices, giving |D| = 2|S| - 2 <= 2*alpha - 2.

#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/invariants.hpp"
#include "minorforge/minor_model.hpp"

namespace minorforge {

struct DomSetStep {
  Vertex anchor = 0;  // u's lowest neighbour in D_i
  Vertex u = 0;       // middle of the length-2 path
  Vertex v = 0;       // the vertex at distance 2

  friend bool operator==(const DomSetStep&, const DomSetStep&) = default;
};

struct DomSetTrace {
  Claw claw;
  std::vector<DomSetStep> steps;
  std::size_t k = 0;
  VertexSet dominating;  // D
  VertexSet stable;      // S: claw leaves plus every step's v

  friend bool operator==(const DomSetTrace&, const DomSetTrace&) = default;
};

/// Throws std::invalid_argument when g is disconnected or `claw` is not an
/// induced K_{1,3} of g.
DomSetTrace grow_dominating_set(const Graph& g, const Claw& claw);

struct DomSetCheck {
  // Also confirm |S| <= alpha(G[D]) with an exact solve.
  bool recompute_alpha = false;
  NodeBudget budget{};
};

/// Re-derives every trace invariant from g alone; reports the first failure.
Verdict verify_domset_trace(const Graph& g, const DomSetTrace& t, const DomSetCheck& opts = {});

/// Maps every vertex of the trace through `to_host`.
DomSetTrace relabel(const DomSetTrace& t, const std::vector<Vertex>& to_host);

}  // namespace minorforge
