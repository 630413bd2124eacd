#include "targetctl/partition.hpp"

#include "targetctl/errors.hpp"

namespace targetctl {

VertexSet DistancePartition::below(int i) const
{
    VertexSet out;
    for (int k = 1; k < i && k <= depth(); ++k) out = out.united(layer(k));
    return out;
}

VertexSet DistancePartition::above(int i) const
{
    VertexSet out;
    for (int k = i + 1; k <= depth(); ++k) out = out.united(layer(k));
    return out;
}

DistancePartition partition_targets(const DiGraph& g, const VertexSet& base,
                                    const VertexSet& targets)
{
    if (base.empty()) throw InputError("partition_targets: base set is empty");
    g.require_subset(base, "base set");
    g.require_subset(targets, "target set");

    auto dist = distances_from_set(g, base);
    DistancePartition part{base, {}, {}};
    for (Vertex t : targets.minus(base)) {
        if (dist[t].is_infinite()) {
            part.unreachable.insert(t);
            continue;
        }
        auto i = static_cast<std::size_t>(dist[t].hops());
        if (part.layers.size() < i) part.layers.resize(i);
        part.layers[i - 1].insert(t);
    }
    while (!part.layers.empty() && part.layers.back().empty()) part.layers.pop_back();
    return part;
}

BipartiteGraph build_layer_graph(const DiGraph& g, const VertexSet& base,
                                 const VertexSet& layer, int i)
{
    g.require_subset(base, "base set");
    g.require_subset(layer, "layer set");
    std::vector<Arc> arcs;
    for (Vertex j : base) {
        auto dist = distances_from(g, j);
        for (Vertex k : layer)
            if (dist[k] == Distance::finite(i)) arcs.emplace_back(j, k);
    }
    return BipartiteGraph(base, layer, std::move(arcs));
}

} // namespace targetctl
