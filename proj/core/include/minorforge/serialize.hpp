#pragma once

// JSON and CSV renderings of the library's reports. Key order is fixed
// (ordered_json), so equal inputs give byte-identical output.

#include <string>

#include <nlohmann/json.hpp>

#include "minorforge/bounds.hpp"
#include "minorforge/domset.hpp"
#include "minorforge/invariants.hpp"
#include "minorforge/minor_model.hpp"
#include "minorforge/peel.hpp"

namespace minorforge {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const MinorModel& m);
Json to_json(const Claw& c);
Json to_json(const DomSetTrace& t);
Json to_json(const InvariantReport& r);
Json to_json(const PeelResult& r);
Json to_json(const BoundReport& r);
Json to_json(const CorpusSummary& s);

/// Inverse of to_json(DomSetTrace); throws nlohmann::json::exception on
/// shape errors.
DomSetTrace trace_from_json(const Json& j);
MinorModel model_from_json(const Json& j);

// graph6,n,alpha,omega,chi,h then <id>_applicable,<id>_bound,<id>_satisfied
// for every bound in kAllBounds order.
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);

std::string invariant_csv_header();
std::string invariant_csv_row(const std::string& graph6, const InvariantReport& r);

}  // namespace minorforge
