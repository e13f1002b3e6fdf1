#pragma once

// Constructive peeling: remove a claw-seeded connected dominating set D,
// build a complete-minor model of G - D recursively, and add D as one more
// branch set (D dominates, so it touches every other branch set).

#include <optional>
#include <vector>

#include "minorforge/domset.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/invariants.hpp"
#include "minorforge/minor_model.hpp"

namespace minorforge {

enum class PeelCase {
  disconnected,
  clawfree_fallback,
  small_alpha_fallback,
  small_order_fallback,
  peel,
};

const char* to_string(PeelCase c);

struct PeelLevel {
  PeelCase kind = PeelCase::peel;
  std::size_t depth = 0;  // peel levels above this one
  VertexSet host;         // vertices of the graph handled here, original labels
  std::optional<std::size_t> alpha;
  SolveStatus alpha_status = SolveStatus::exact;

  // kind == disconnected
  std::size_t components = 0;
  std::size_t chosen_component = 0;

  // kind == peel; all labels original
  VertexSet removed;
  std::optional<DomSetTrace> trace;
  std::size_t remaining_order = 0;
  std::optional<std::size_t> remaining_alpha;

  // fallback kinds
  bool exact_fallback = false;
  std::size_t fallback_order = 0;
};

struct PeelResult {
  std::vector<PeelLevel> levels;
  MinorModel model;  // original labels
  std::size_t achieved = 0;
};

struct PeelOptions {
  std::size_t exact_cap = 16;    // largest order solved exactly in fallbacks
  std::size_t order_floor = 10;  // remaining graphs below this stop peeling
  NodeBudget alpha_budget{};
  NodeBudget minor_budget{};
};

/// Adds the connected dominating set d as a new branch set to `inner`, a
/// model of g - d given in g's labels. Throws std::invalid_argument when d is
/// empty, disconnected or not dominating, or when inner is not a valid model
/// avoiding d.
MinorModel compose_model(const Graph& g, const VertexSet& d, const MinorModel& inner);

/// Never fails: cases the construction cannot handle fall back to exact
/// search (order <= exact_cap) or the greedy contraction heuristic.
PeelResult peel_minor(const Graph& g, const PeelOptions& opts = {});

}  // namespace minorforge
