#pragma once

#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Outcome of a certificate check: ok, or the first violated condition.
struct Verdict {
  bool ok = true;
  std::string message;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Disjoint connected branch sets that are pairwise joined by an edge;
/// contracting each set yields a complete graph of order branch_sets.size().
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  [[nodiscard]] std::size_t order() const { return branch_sets.size(); }
  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

/// Checks membership, non-emptiness, disjointness, connectivity of each
/// branch set and pairwise adjacency, in that order.
Verdict verify_minor_model(const Graph& g, const MinorModel& m);

/// Cheap lower bound for the Hadwiger number: repeatedly contract the edge
/// whose endpoints share the most neighbours (ties to the lowest pair),
/// tracking branch sets, and keep the largest clique seen in any contracted
/// graph. Always returns a valid model; order 0 only for the empty graph.
MinorModel greedy_contraction_model(const Graph& g);

/// Relabels a model on a subgraph back to host labels.
MinorModel lift_model(const MinorModel& m, const std::vector<Vertex>& to_host);

}  // namespace minorforge
