#pragma once

#include "targetctl/graph.hpp"

#include <optional>
#include <vector>

namespace targetctl {

/// One application of the color-change rule: `forcer` (black, with exactly
/// one white out-neighbour at the time) turned `forced` black.
struct Force {
    Vertex forcer;
    Vertex forced;
    friend bool operator==(const Force&, const Force&) = default;
};

/// Result of running the color-change rule to its fixed point: the derived
/// set plus one chronological list of forces that reaches it.
struct ForcingState {
    VertexSet initial;
    VertexSet black;
    std::vector<Force> forces;
};

/// Which eligible black vertex forces next. The derived set does not depend
/// on this; only the emitted chronological list does.
enum class ForcePolicy { AscendingId, DescendingId };

/// Run the color-change rule from `initial` until no more changes are
/// possible. Deterministic: with AscendingId the smallest-id eligible
/// vertex forces first at every step.
ForcingState derived_set(const DiGraph& g, const VertexSet& initial,
                         ForcePolicy policy = ForcePolicy::AscendingId);

/// True iff the derived set of `c` is the whole vertex set.
bool is_zero_forcing_set(const DiGraph& g, const VertexSet& c);

/// Step-by-step legality check of a chronological force list: at each step
/// the forcer must be black and the forced vertex its unique white
/// out-neighbour, and no vertex may be forced twice.
bool replays_legally(const DiGraph& g, const VertexSet& initial,
                     const std::vector<Force>& forces);

/// Directed bipartite graph (V-, V+, E) with every arc from left to right.
struct BipartiteGraph {
    VertexSet left;
    VertexSet right;
    std::vector<Arc> arcs; // sorted

    /// Validates disjointness and arc orientation; throws InputError.
    BipartiteGraph(VertexSet left, VertexSet right, std::vector<Arc> arcs);

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

struct BipartiteForcingResult {
    bool all_forced;
    /// Smallest-id right vertex left white, when all_forced is false.
    std::optional<Vertex> first_unforced;
    std::vector<Force> forces;
};

/// Zero forcing with `left` initially black and `right` white. Right
/// vertices never force (they have no out-arcs), so this reports whether
/// the left side forces the entire right side.
BipartiteForcingResult bipartite_forces_all(const BipartiteGraph& b);

/// The bipartite graph as an ordinary DiGraph on max-id ambient vertices.
DiGraph embed_bipartite(const BipartiteGraph& b);

} // namespace targetctl
