#include "minorforge/invariants.hpp"

#include <stdexcept>

namespace minorforge {

InvariantReport compute_invariants(const Graph& g, const InvariantBudgets& budgets) {
  if (g.order() == 0) throw std::invalid_argument("compute_invariants: graph has no vertices");
  InvariantReport r;
  r.order = g.order();
  r.alpha = stability_number(g, budgets.alpha);
  r.omega = clique_number(g, budgets.alpha);
  r.chi = chromatic_number(g, budgets.chromatic);
  r.hadwiger = hadwiger_number(g, budgets.minor);
  r.claw = find_claw(g);
  return r;
}

}  // namespace minorforge
