#pragma once

#include "targetctl/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace targetctl {

enum class GraphFormat { Json, EdgeList };

/// A parsed graph file: the graph plus whatever leader/target sets the
/// file carried (JSON files may embed them; edge lists never do).
struct GraphFile {
    DiGraph graph;
    std::optional<VertexSet> leaders;
    std::optional<VertexSet> targets;
};

/// Parse `{"n": int, "arcs": [[u,v],...], "leaders": [...]?, "targets": [...]?}`.
/// Diagnostics name the offending field and entry index.
GraphFile load_graph_json(const std::string& text);

/// Parse the plain edge-list format: first line `n`, then one `u v` pair
/// per line. Blank lines and `#` comments are skipped; diagnostics carry
/// line numbers.
GraphFile load_graph_edgelist(const std::string& text);

GraphFile load_graph(const std::string& text, GraphFormat format);

/// Canonical JSON: sorted arcs, leaders/targets included only when present.
/// Reloading the output yields an identical GraphFile.
std::string graph_to_json(const GraphFile& f);

/// DOT rendering: leaders filled black, targets double-circled.
std::string export_dot(const DiGraph& g, const VertexSet& leaders,
                       const VertexSet& targets, const std::string& name = "G");

} // namespace targetctl
