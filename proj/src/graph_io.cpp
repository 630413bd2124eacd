#include "targetctl/graph_io.hpp"

#include "targetctl/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace targetctl {

using nlohmann::json;

namespace {

VertexSet parse_vertex_list(const json& arr, const char* field)
{
    if (!arr.is_array())
        throw InputError(std::string(field) + ": expected an array of vertex ids");
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer())
            throw InputError(std::string(field) + "[" + std::to_string(i) +
                             "]: expected an integer vertex id");
        members.push_back(arr[i].get<Vertex>());
    }
    return VertexSet(std::move(members));
}

} // namespace

GraphFile load_graph_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("top level: expected a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw InputError("field \"n\": missing or not an integer");
    int n = doc["n"].get<int>();
    if (!doc.contains("arcs") || !doc["arcs"].is_array())
        throw InputError("field \"arcs\": missing or not an array");

    std::vector<Arc> arcs;
    const json& arr = doc["arcs"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& e = arr[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("arcs[" + std::to_string(i) + "]: expected a pair [u,v]");
        arcs.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }

    GraphFile out{DiGraph(n, std::move(arcs)), std::nullopt, std::nullopt};
    if (doc.contains("leaders")) {
        out.leaders = parse_vertex_list(doc["leaders"], "leaders");
        out.graph.require_subset(*out.leaders, "leaders");
    }
    if (doc.contains("targets")) {
        out.targets = parse_vertex_list(doc["targets"], "targets");
        out.graph.require_subset(*out.targets, "targets");
    }
    return out;
}

GraphFile load_graph_edgelist(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!n) {
            int value;
            if (!(fields >> value)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected the vertex count");
            }
            n = value;
            std::string rest;
            if (fields >> rest)
                throw InputError("line " + std::to_string(lineno) +
                                 ": trailing content after the vertex count");
            continue;
        }
        Vertex u, v;
        if (!(fields >> u)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw InputError("line " + std::to_string(lineno) + ": expected `u v`");
        }
        if (!(fields >> v))
            throw InputError("line " + std::to_string(lineno) +
                             ": arc is missing its head vertex");
        std::string rest;
        if (fields >> rest)
            throw InputError("line " + std::to_string(lineno) +
                             ": trailing content after the arc");
        arcs.emplace_back(u, v);
    }
    if (!n) throw InputError("empty edge list: the first line must be the vertex count");
    return GraphFile{DiGraph(*n, std::move(arcs)), std::nullopt, std::nullopt};
}

GraphFile load_graph(const std::string& text, GraphFormat format)
{
    switch (format) {
    case GraphFormat::Json: return load_graph_json(text);
    case GraphFormat::EdgeList: return load_graph_edgelist(text);
    }
    throw InputError("unknown graph format");
}

std::string graph_to_json(const GraphFile& f)
{
    json doc;
    doc["n"] = f.graph.vertex_count();
    json arcs = json::array();
    for (auto [u, v] : f.graph.arcs()) arcs.push_back(json::array({u, v}));
    doc["arcs"] = std::move(arcs);
    if (f.leaders) doc["leaders"] = f.leaders->members();
    if (f.targets) doc["targets"] = f.targets->members();
    return doc.dump(2) + "\n";
}

std::string export_dot(const DiGraph& g, const VertexSet& leaders,
                       const VertexSet& targets, const std::string& name)
{
    g.require_subset(leaders, "leaders");
    g.require_subset(targets, "targets");
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  node [shape=circle];\n";
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        os << "  " << v << " [";
        bool leader = leaders.contains(v);
        bool target = targets.contains(v);
        if (leader) os << "style=filled, fillcolor=black, fontcolor=white";
        if (leader && target) os << ", ";
        if (target) os << "peripheries=2";
        os << "];\n";
    }
    for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace targetctl
