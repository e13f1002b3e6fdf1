#include "minorforge/serialize.hpp"

namespace minorforge {

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const MinorModel& m) {
  Json out = Json::array();
  for (const auto& set : m.branch_sets) out.push_back(to_json(set));
  return out;
}

Json to_json(const Claw& c) {
  return Json{{"center", c.center}, {"leaves", Json(c.leaves)}};
}

Json to_json(const DomSetTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(Json{{"anchor", s.anchor}, {"u", s.u}, {"v", s.v}});
  return Json{{"claw", to_json(t.claw)},
              {"steps", std::move(steps)},
              {"k", t.k},
              {"D", to_json(t.dominating)},
              {"S", to_json(t.stable)}};
}

DomSetTrace trace_from_json(const Json& j) {
  DomSetTrace t;
  t.claw.center = j.at("claw").at("center").get<Vertex>();
  t.claw.leaves = j.at("claw").at("leaves").get<std::array<Vertex, 3>>();
  for (const auto& s : j.at("steps"))
    t.steps.push_back({s.at("anchor").get<Vertex>(), s.at("u").get<Vertex>(), s.at("v").get<Vertex>()});
  t.k = j.at("k").get<std::size_t>();
  t.dominating = VertexSet(j.at("D").get<std::vector<Vertex>>());
  t.stable = VertexSet(j.at("S").get<std::vector<Vertex>>());
  return t;
}

MinorModel model_from_json(const Json& j) {
  MinorModel m;
  for (const auto& set : j) m.branch_sets.emplace_back(set.get<std::vector<Vertex>>());
  return m;
}

Json to_json(const InvariantReport& r) {
  return Json{
      {"n", r.order},
      {"alpha", {{"value", r.alpha.size}, {"witness", to_json(r.alpha.witness)},
                 {"status", to_string(r.alpha.status)}}},
      {"omega", {{"value", r.omega.size}, {"witness", to_json(r.omega.witness)},
                 {"status", to_string(r.omega.status)}}},
      {"chi", {{"value", r.chi.colors}, {"coloring", Json(r.chi.color_of)},
               {"status", to_string(r.chi.status)}}},
      {"hadwiger", {{"value", r.hadwiger.h}, {"model", to_json(r.hadwiger.witness)},
                    {"status", to_string(r.hadwiger.status)}}},
      {"clawfree", r.clawfree()},
      {"claw", r.claw ? to_json(*r.claw) : Json(nullptr)},
  };
}

Json to_json(const PeelResult& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json j{{"case", to_string(l.kind)}, {"depth", l.depth}, {"order", l.host.size()},
           {"host", to_json(l.host)}};
    if (l.alpha) {
      j["alpha"] = *l.alpha;
      j["alpha_status"] = to_string(l.alpha_status);
    }
    switch (l.kind) {
      case PeelCase::disconnected:
        j["components"] = l.components;
        j["chosen_component"] = l.chosen_component;
        break;
      case PeelCase::peel:
        j["D"] = to_json(l.removed);
        j["remaining_order"] = l.remaining_order;
        j["remaining_alpha"] = l.remaining_alpha ? Json(*l.remaining_alpha) : Json(nullptr);
        j["trace"] = l.trace ? to_json(*l.trace) : Json(nullptr);
        break;
      default:
        j["exact"] = l.exact_fallback;
        j["fallback_order"] = l.fallback_order;
        break;
    }
    levels.push_back(std::move(j));
  }
  return Json{{"achieved", r.achieved}, {"model", to_json(r.model)}, {"levels", std::move(levels)}};
}

Json to_json(const BoundReport& r) {
  Json bounds = Json::object();
  for (const auto& c : r.checks) {
    bounds[to_string(c.id)] = Json{
        {"status", to_string(c.status)},
        {"bound", c.value ? Json(to_string(*c.value)) : Json(nullptr)},
        {"slack", c.slack ? Json(to_string(*c.slack)) : Json(nullptr)},
    };
  }
  return Json{
      {"graph6", r.graph6},
      {"n", r.n},
      {"alpha", r.alpha},
      {"omega", r.omega ? Json(*r.omega) : Json(nullptr)},
      {"chi", r.chi},
      {"h", r.h},
      {"solver_status", {{"alpha", to_string(r.alpha_status)},
                         {"omega", r.omega ? Json(to_string(r.omega_status)) : Json(nullptr)},
                         {"chi", to_string(r.chi_status)},
                         {"h", to_string(r.h_status)}}},
      {"bounds", std::move(bounds)},
      {"chi_le_h", to_string(r.hadwiger)},
  };
}

Json to_json(const CorpusSummary& s) {
  Json per = Json::object();
  for (std::size_t i = 0; i < kAllBounds.size(); ++i) {
    per[to_string(kAllBounds[i])] = Json{{"applicable", s.formula_applicable[i]},
                                         {"violations", s.formula_violations[i]},
                                         {"undecided", s.formula_undecided[i]}};
  }
  return Json{
      {"checked", s.checked},
      {"satisfied", s.satisfied},
      {"undecided", s.undecided},
      {"violations", s.violations},
      {"formulas", std::move(per)},
      {"chi_le_h", {{"violations", s.hadwiger_violations}, {"undecided", s.hadwiger_undecided}}},
      {"violation_witnesses", Json(s.violation_witnesses)},
  };
}

std::string bound_csv_header() {
  std::string out = "graph6,n,alpha,omega,chi,h";
  for (BoundId id : kAllBounds) {
    const std::string name = to_string(id);
    out += "," + name + "_applicable," + name + "_bound," + name + "_satisfied";
  }
  return out;
}

std::string bound_csv_row(const BoundReport& r) {
  std::string out = r.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.alpha) + "," +
                    (r.omega ? std::to_string(*r.omega) : std::string()) + "," +
                    std::to_string(r.chi) + "," + std::to_string(r.h);
  for (const auto& c : r.checks) {
    switch (c.status) {
      case CheckStatus::satisfied:
        out += ",yes," + to_string(*c.value) + ",yes";
        break;
      case CheckStatus::violated:
        out += ",yes," + to_string(*c.value) + ",no";
        break;
      case CheckStatus::not_applicable:
        out += ",no,,";
        break;
      case CheckStatus::undecided:
        out += ",undecided,,undecided";
        break;
    }
  }
  return out;
}

std::string invariant_csv_header() { return "graph6,n,alpha,omega,chi,h,clawfree,exact"; }

std::string invariant_csv_row(const std::string& graph6, const InvariantReport& r) {
  return graph6 + "," + std::to_string(r.order) + "," + std::to_string(r.alpha.size) + "," +
         std::to_string(r.omega.size) + "," + std::to_string(r.chi.colors) + "," +
         std::to_string(r.hadwiger.h) + "," + (r.clawfree() ? "yes" : "no") + "," +
         (r.exact() ? "yes" : "no");
}

}  // namespace minorforge
