#include "minorforge/peel.hpp"

#include <stdexcept>

namespace minorforge {

const char* to_string(PeelCase c) {
  switch (c) {
    case PeelCase::disconnected:
      return "disconnected";
    case PeelCase::clawfree_fallback:
      return "clawfree-fallback";
    case PeelCase::small_alpha_fallback:
      return "small-alpha-fallback";
    case PeelCase::small_order_fallback:
      return "small-order-fallback";
    case PeelCase::peel:
      return "peel";
  }
  return "?";
}

MinorModel compose_model(const Graph& g, const VertexSet& d, const MinorModel& inner) {
  if (d.empty()) throw std::invalid_argument("compose_model: empty dominating set");
  if (d.members().back() >= g.order()) throw std::out_of_range("compose_model: vertex out of range");
  if (!induces_connected(g, d)) throw std::invalid_argument("compose_model: D is not connected");
  if (!is_dominating(g, d)) throw std::invalid_argument("compose_model: D is not dominating");
  for (const auto& set : inner.branch_sets)
    for (Vertex v : set)
      if (d.contains(v)) throw std::invalid_argument("compose_model: inner model meets D");
  if (auto verdict = verify_minor_model(g, inner); !verdict)
    throw std::invalid_argument("compose_model: inner model invalid: " + verdict.message);

  MinorModel out = inner;
  out.branch_sets.push_back(d);
  return out;
}

namespace {

VertexSet lift(const VertexSet& s, const std::vector<Vertex>& to_orig) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_orig[v]);
  return VertexSet(std::move(out));
}

class Peeler {
 public:
  explicit Peeler(const PeelOptions& opts) : opts_(opts) {}

  // `to_orig` maps g's labels to original labels. Levels are reported in
  // original labels; the returned model uses g's labels.
  PeelResult run(const Graph& g, const std::vector<Vertex>& to_orig, std::size_t depth) {
    PeelResult result;
    if (g.order() == 0) return result;

    PeelLevel level;
    level.depth = depth;
    level.host = VertexSet(to_orig);

    const auto comps = connected_components(g);
    if (comps.size() > 1) {
      level.kind = PeelCase::disconnected;
      level.components = comps.size();
      PeelResult best;
      std::vector<Vertex> best_map;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        Subgraph sub = induced_subgraph(g, comps[i]);
        PeelResult r = run(sub.graph, compose_map(sub.to_host, to_orig), depth);
        if (i == 0 || r.achieved > best.achieved) {
          best = std::move(r);
          best_map = std::move(sub.to_host);
          level.chosen_component = i;
        }
      }
      result.levels.push_back(std::move(level));
      for (auto& l : best.levels) result.levels.push_back(std::move(l));
      result.model = lift_model(best.model, best_map);
      result.achieved = best.achieved;
      return result;
    }

    const ExtremalSet alpha = stability_number(g, opts_.alpha_budget);
    level.alpha = alpha.size;
    level.alpha_status = alpha.status;

    const auto claw = find_claw(g);
    if (!claw) return fallback(g, std::move(level), PeelCase::clawfree_fallback);
    if (alpha.size <= 2) return fallback(g, std::move(level), PeelCase::small_alpha_fallback);
    if (depth > 0 && g.order() < opts_.order_floor)
      return fallback(g, std::move(level), PeelCase::small_order_fallback);

    const DomSetTrace trace = grow_dominating_set(g, *claw);
    const Subgraph rest = delete_vertices(g, trace.dominating);
    const ExtremalSet rest_alpha = stability_number(rest.graph, opts_.alpha_budget);

    level.kind = PeelCase::peel;
    level.removed = lift(trace.dominating, to_orig);
    level.trace = relabel(trace, to_orig);
    level.remaining_order = rest.graph.order();
    if (rest_alpha.status == SolveStatus::exact) level.remaining_alpha = rest_alpha.size;

    PeelResult inner = run(rest.graph, compose_map(rest.to_host, to_orig), depth + 1);
    result.model = compose_model(g, trace.dominating, lift_model(inner.model, rest.to_host));
    result.achieved = result.model.order();
    result.levels.push_back(std::move(level));
    for (auto& l : inner.levels) result.levels.push_back(std::move(l));
    return result;
  }

 private:
  static std::vector<Vertex> compose_map(const std::vector<Vertex>& inner,
                                         const std::vector<Vertex>& outer) {
    std::vector<Vertex> out;
    out.reserve(inner.size());
    for (Vertex v : inner) out.push_back(outer[v]);
    return out;
  }

  PeelResult fallback(const Graph& g, PeelLevel level, PeelCase kind) {
    level.kind = kind;
    PeelResult result;
    if (g.order() <= opts_.exact_cap) {
      Hadwiger h = hadwiger_number(g, opts_.minor_budget);
      result.model = std::move(h.witness);
      level.exact_fallback = h.status == SolveStatus::exact;
    } else {
      result.model = greedy_contraction_model(g);
      level.exact_fallback = false;
    }
    result.achieved = result.model.order();
    level.fallback_order = result.achieved;
    result.levels.push_back(std::move(level));
    return result;
  }

  PeelOptions opts_;
};

}  // namespace

PeelResult peel_minor(const Graph& g, const PeelOptions& opts) {
  std::vector<Vertex> identity(g.order());
  for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
  PeelResult result = Peeler(opts).run(g, identity, 0);
  // Top-level labels are original labels.
  if (auto verdict = verify_minor_model(g, result.model); !verdict)
    throw std::logic_error("peel_minor produced an invalid model: " + verdict.message);
  return result;
}

}  // namespace minorforge
