#pragma once

#include "targetctl/controllability.hpp"
#include "targetctl/leader_selection.hpp"

#include <json.hpp>

namespace targetctl {

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const std::vector<Force>& forces);
nlohmann::json to_json(const BipartiteGraph& b);

/// Realization as replayable JSON: graph, leaders, targets, and the state
/// matrix row-major with entries as exact rational strings.
nlohmann::json to_json(const Realization& r);
Realization realization_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const RootSet& r);
nlohmann::json to_json(const std::vector<TraceEvent>& trace);

} // namespace targetctl
