#include "targetctl/serialize.hpp"

#include "targetctl/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace targetctl {

using nlohmann::json;

json to_json(const VertexSet& s) {
    return json(s.members());
}

json to_json(const std::vector<Force>& forces) {
    json arr = json::array();
    for (const Force& f : forces) {
        arr.push_back({{"forcer", f.forcer}, {"forced", f.forced}});
    }
    return arr;
}

json to_json(const BipartiteGraph& b) {
    json arcs = json::array();
    for (const Arc& a : b.arcs) {
        arcs.push_back({a.first, a.second});
    }
    return {{"left", to_json(b.left)}, {"right", to_json(b.right)}, {"arcs", std::move(arcs)}};
}

json to_json(const Realization& r) {
    json arcs = json::array();
    for (const Arc& a : r.graph.arcs()) {
        arcs.push_back({a.first, a.second});
    }
    json state = json::array();
    for (int i = 0; i < r.state.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < r.state.cols(); ++j) {
            row.push_back(to_string(r.state.at(i, j)));
        }
        state.push_back(std::move(row));
    }
    return {{"graph", {{"n", r.order()}, {"arcs", std::move(arcs)}}},
            {"leaders", to_json(r.leaders)},
            {"targets", to_json(r.targets)},
            {"state", std::move(state)}};
}

namespace {

VertexSet vertex_set_from_json(const json& j, const char* field) {
    if (!j.is_array()) {
        throw InputError(std::string(field) + ": expected an array of vertex ids");
    }
    std::vector<Vertex> members;
    for (const json& item : j) {
        if (!item.is_number_integer()) {
            throw InputError(std::string(field) + ": expected integer vertex ids");
        }
        members.push_back(item.get<Vertex>());
    }
    return VertexSet(std::move(members));
}

const json& require_field(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw InputError(std::string("missing field '") + field + "'");
    }
    return *it;
}

} // namespace

Realization realization_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("realization: expected a JSON object");
    }
    const json& jg = require_field(j, "graph");
    const json& jn = require_field(jg, "n");
    if (!jn.is_number_integer()) {
        throw InputError("graph.n: expected an integer");
    }
    const json& jarcs = require_field(jg, "arcs");
    if (!jarcs.is_array()) {
        throw InputError("graph.arcs: expected an array of [u,v] pairs");
    }
    std::vector<Arc> arcs;
    for (const json& a : jarcs) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer()) {
            throw InputError("graph.arcs: expected [u,v] integer pairs");
        }
        arcs.emplace_back(a[0].get<Vertex>(), a[1].get<Vertex>());
    }
    DiGraph g(jn.get<int>(), std::move(arcs));
    VertexSet leaders = vertex_set_from_json(require_field(j, "leaders"), "leaders");
    VertexSet targets = vertex_set_from_json(require_field(j, "targets"), "targets");
    const json& jstate = require_field(j, "state");
    const int n = g.vertex_count();
    if (!jstate.is_array() || static_cast<int>(jstate.size()) != n) {
        throw InputError("state: expected " + std::to_string(n) + " rows");
    }
    RatMatrix x(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = jstate[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw InputError("state row " + std::to_string(i) + ": expected " +
                             std::to_string(n) + " entries");
        }
        for (int jcol = 0; jcol < n; ++jcol) {
            const json& cell = row[static_cast<size_t>(jcol)];
            if (cell.is_number_integer()) {
                x.at(i, jcol) = cell.get<long>();
            } else if (cell.is_string()) {
                x.at(i, jcol) = rational_from_string(cell.get<std::string>());
            } else {
                throw InputError("state entries must be integers or rational strings");
            }
        }
    }
    return Realization(std::move(g), std::move(x), std::move(leaders), std::move(targets));
}

namespace {

json certificate_to_json(const Certificate& c) {
    return std::visit(
        [](const auto& cert) -> json {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, SufficientEvidence>) {
                json layers = json::array();
                for (const auto& layer : cert.layers) {
                    layers.push_back({{"index", layer.index},
                                      {"graph", to_json(layer.graph)},
                                      {"forces", to_json(layer.forces)}});
                }
                return {{"kind", "sufficient"},
                        {"initial", to_json(cert.derived.initial)},
                        {"derived", to_json(cert.derived.black)},
                        {"derivation", to_json(cert.derived.forces)},
                        {"already_controlled", to_json(cert.already_controlled)},
                        {"layers", std::move(layers)}};
            } else if constexpr (std::is_same_v<T, LayerObstruction>) {
                return {{"kind", "layer_obstruction"},
                        {"layer", cert.index},
                        {"first_unforced", cert.first_unforced},
                        {"layer_vertices", to_json(cert.layer)}};
            } else if constexpr (std::is_same_v<T, UnreachableTargets>) {
                return {{"kind", "unreachable_targets"}, {"targets", to_json(cert.targets)}};
            } else if constexpr (std::is_same_v<T, NecessaryViolation>) {
                return {{"kind", "necessary_violation"},
                        {"initial", to_json(cert.initial)},
                        {"derived", to_json(cert.derived)},
                        {"unforced", to_json(cert.unforced)}};
            } else if constexpr (std::is_same_v<T, NecessaryHolds>) {
                return {{"kind", "necessary_holds"},
                        {"initial", to_json(cert.initial)},
                        {"forces", to_json(cert.forces)}};
            } else if constexpr (std::is_same_v<T, RankWitness>) {
                return {{"kind", "rank_witness"},
                        {"policy", to_string(cert.policy)},
                        {"attempt", cert.attempt},
                        {"rank", cert.rank},
                        {"target_count", cert.target_count},
                        {"realization", to_json(cert.realization)}};
            } else {
                static_assert(std::is_same_v<T, SamplingEvidence>);
                json obstruction = nullptr;
                if (cert.obstruction) {
                    obstruction = {{"layer", cert.obstruction->index},
                                   {"first_unforced", cert.obstruction->first_unforced},
                                   {"layer_vertices", to_json(cert.obstruction->layer)}};
                }
                return {{"kind", "sampling_evidence"},
                        {"samples", cert.samples},
                        {"full_rank", cert.full_rank},
                        {"obstruction", std::move(obstruction)}};
            }
        },
        c);
}

} // namespace

json to_json(const Verdict& v) {
    return {{"status", to_string(v.status)},
            {"certificate", certificate_to_json(v.certificate)},
            {"samples", v.samples},
            {"seed", v.seed}};
}

json to_json(const RootSet& r) {
    return {{"roots", to_json(r.roots)}, {"optimal", r.optimal}};
}

json to_json(const std::vector<TraceEvent>& trace) {
    json arr = json::array();
    for (const TraceEvent& e : trace) {
        switch (e.kind) {
        case TraceEvent::Kind::Derived:
            arr.push_back({{"event", "derived"},
                           {"leaders", to_json(e.leaders)},
                           {"derived", to_json(e.derived)}});
            break;
        case TraceEvent::Kind::LayerPass:
            arr.push_back(
                {{"event", "layer_pass"}, {"leaders", to_json(e.leaders)}, {"layer", e.layer}});
            break;
        case TraceEvent::Kind::LayerFail:
            arr.push_back({{"event", "layer_fail"},
                           {"leaders", to_json(e.leaders)},
                           {"layer", e.layer},
                           {"first_unforced", e.vertex}});
            break;
        case TraceEvent::Kind::AddLeader:
            arr.push_back({{"event", "add_leader"},
                           {"leaders", to_json(e.leaders)},
                           {"vertex", e.vertex}});
            break;
        }
    }
    return arr;
}

} // namespace targetctl
