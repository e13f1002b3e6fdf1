#pragma once

// Exact graph invariants with certificates.
//
// Every solver takes an explicit search-node budget. When the budget runs out
// the result is flagged SolveStatus::timeout and carries the best certified
// value found so far (a lower bound for alpha, omega and h; an upper bound for
// chi); it is never reported as exact.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor_model.hpp"

namespace minorforge {

enum class SolveStatus { exact, timeout };

const char* to_string(SolveStatus s);

struct NodeBudget {
  std::uint64_t nodes = 50'000'000;
};

struct ExtremalSet {
  std::size_t size = 0;
  VertexSet witness;
  SolveStatus status = SolveStatus::exact;
};

/// Maximum stable set by branch and bound: branch on a maximum-degree
/// vertex (exclude it / take it and drop its neighbourhood), pruned by a
/// greedy clique cover. Isolated vertices of the candidate set are taken
/// without branching.
ExtremalSet stability_number(const Graph& g, NodeBudget budget = {});

/// Maximum clique, via stability_number of the complement.
ExtremalSet clique_number(const Graph& g, NodeBudget budget = {});

struct Coloring {
  std::size_t colors = 0;
  std::vector<std::size_t> color_of;  // one entry per vertex, values < colors
  SolveStatus status = SolveStatus::exact;
};

/// Exact DSATUR branch and bound, seeded with a maximum clique (lower bound,
/// pre-coloured) and a greedy DSATUR colouring (upper bound).
Coloring chromatic_number(const Graph& g, NodeBudget budget = {.nodes = 5'000'000});

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Induced K_{1,3}: center adjacent to all leaves, leaves pairwise
/// non-adjacent, leaves ascending.
struct Claw {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};

  [[nodiscard]] VertexSet vertices() const {
    return VertexSet{center, leaves[0], leaves[1], leaves[2]};
  }
  friend bool operator==(const Claw&, const Claw&) = default;
};

bool is_claw(const Graph& g, const Claw& c);

/// Lexicographically smallest (center, leaves) claw, if any.
std::optional<Claw> find_claw(const Graph& g);

enum class MinorAnswer { found, none, timeout };

const char* to_string(MinorAnswer a);

struct MinorSearch {
  MinorAnswer answer = MinorAnswer::none;
  std::optional<MinorModel> model;  // set iff answer == found
  std::uint64_t nodes = 0;
};

/// Decides whether K_t is a minor of g. A returned model is verified before
/// it is handed out; `none` means the search space was exhausted.
/// Throws std::invalid_argument for t == 0.
MinorSearch kt_minor_model(const Graph& g, std::size_t t, NodeBudget budget = {});

struct Hadwiger {
  std::size_t h = 0;
  MinorModel witness;
  SolveStatus status = SolveStatus::exact;
};

/// Largest complete minor, searching upward from the greedy-contraction
/// lower bound. On timeout h is the largest certified order.
/// Throws std::invalid_argument for the 0-vertex graph.
Hadwiger hadwiger_number(const Graph& g, NodeBudget budget = {});

struct InvariantBudgets {
  NodeBudget alpha{};
  NodeBudget minor{};
  NodeBudget chromatic{.nodes = 5'000'000};
};

struct InvariantReport {
  std::size_t order = 0;
  ExtremalSet alpha;
  ExtremalSet omega;
  Coloring chi;
  Hadwiger hadwiger;
  std::optional<Claw> claw;

  [[nodiscard]] bool clawfree() const { return !claw.has_value(); }
  [[nodiscard]] bool exact() const {
    return alpha.status == SolveStatus::exact && omega.status == SolveStatus::exact &&
           chi.status == SolveStatus::exact && hadwiger.status == SolveStatus::exact;
  }
};

/// All invariants of a graph with at least one vertex.
InvariantReport compute_invariants(const Graph& g, const InvariantBudgets& budgets = {});

}  // namespace minorforge
