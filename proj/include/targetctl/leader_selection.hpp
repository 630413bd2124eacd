#pragma once

#include "targetctl/graph.hpp"

#include <vector>

namespace targetctl {

/// Set-cover view of root selection: rows are targets, columns are all
/// vertices, and column v covers row t exactly when t is reachable from v.
/// Always feasible, since every target covers itself.
struct CoverInstance {
    int ambient = 0;
    VertexSet targets;
    /// row_cover[k] = vertices from which targets.members()[k] is reachable.
    std::vector<VertexSet> row_cover;
};

CoverInstance build_cover(const DiGraph& g, const VertexSet& targets);

struct RootSet {
    VertexSet roots;
    /// True when the size is a proved minimum (exact solve), false for the
    /// greedy heuristic.
    bool optimal = false;
};

struct MinRootOptions {
    /// Vertex-count cap for the exact branch-and-bound; larger instances
    /// fall back to the greedy heuristic.
    int exact_threshold = 40;
    bool heuristic_only = false;
};

/// A smallest set of roots reaching every target. Exact solves return the
/// lexicographically smallest among all minimum-size solutions; ties in
/// the greedy heuristic break toward smaller vertex ids.
RootSet min_root_set(const CoverInstance& instance, const MinRootOptions& options = {});
RootSet min_root_set(const DiGraph& g, const VertexSet& targets,
                     const MinRootOptions& options = {});

/// Every minimum-size root set, sorted lexicographically. Exact solver
/// only; throws InputError when the options force the heuristic.
std::vector<VertexSet> all_min_root_sets(const CoverInstance& instance,
                                         const MinRootOptions& options = {});
std::vector<VertexSet> all_min_root_sets(const DiGraph& g, const VertexSet& targets,
                                         const MinRootOptions& options = {});

struct TraceEvent {
    enum class Kind { Derived, LayerPass, LayerFail, AddLeader };
    Kind kind;
    /// Leader set when the event fired (after the addition, for AddLeader).
    VertexSet leaders;
    VertexSet derived; // Derived only
    int layer = 0;     // LayerPass / LayerFail
    Vertex vertex = 0; // LayerFail: first unforced; AddLeader: the new leader
};

struct SelectionResult {
    VertexSet leaders;
    RootSet initial;
    std::vector<TraceEvent> trace;
};

/// Greedy leader augmentation: start from a minimum root set; whenever a
/// target layer resists forcing, promote its first unforced vertex to a
/// leader and start over. The returned leaders always satisfy the
/// layer-forcing certificate, so the selection is proved sufficient.
SelectionResult select_leaders(const DiGraph& g, const VertexSet& targets,
                               const MinRootOptions& options = {});

} // namespace targetctl
