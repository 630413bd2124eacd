#pragma once

#include "targetctl/graph.hpp"
#include "targetctl/zero_forcing.hpp"

#include <vector>

namespace targetctl {

/// Distance partition of a target set relative to a base set: layer i holds
/// the partitioned vertices at set-distance exactly i from `base`.
struct DistancePartition {
    VertexSet base;
    /// layers[i-1] is V_i; trailing empty layers are trimmed, intermediate
    /// ones may be empty.
    std::vector<VertexSet> layers;
    VertexSet unreachable;

    int depth() const { return static_cast<int>(layers.size()); }
    const VertexSet& layer(int i) const { return layers.at(i - 1); }

    /// Union of layers with index strictly below i (empty for i = 1).
    VertexSet below(int i) const;
    /// Union of layers with index strictly above i (empty for i = depth()).
    VertexSet above(int i) const;
};

/// Partition `targets` minus `base` by set-distance from `base`; targets
/// with no path from `base` land in `unreachable`. Throws InputError when
/// `base` is empty.
DistancePartition partition_targets(const DiGraph& g, const VertexSet& base,
                                    const VertexSet& targets);

/// Bipartite distance graph for one layer: left = base, right = layer, and
/// an arc (j, k) exactly when d(j, k) = i in the network graph.
BipartiteGraph build_layer_graph(const DiGraph& g, const VertexSet& base,
                                 const VertexSet& layer, int i);

} // namespace targetctl
