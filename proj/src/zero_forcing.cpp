#include "targetctl/zero_forcing.hpp"

#include "targetctl/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace targetctl {

ForcingState derived_set(const DiGraph& g, const VertexSet& initial, ForcePolicy policy)
{
    g.require_subset(initial, "initial black set");
    const int n = g.vertex_count();
    std::vector<char> black(n + 1, 0);
    for (Vertex v : initial) black[v] = 1;

    // white_out[v]: number of currently white out-neighbours of v.
    std::vector<int> white_out(n + 1, 0);
    std::set<Vertex> eligible; // black vertices with exactly one white out-neighbour
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w : g.out_neighbors(v))
            if (!black[w]) ++white_out[v];
        if (black[v] && white_out[v] == 1) eligible.insert(v);
    }

    ForcingState state{initial, initial, {}};
    while (!eligible.empty()) {
        Vertex u = policy == ForcePolicy::AscendingId ? *eligible.begin()
                                                      : *eligible.rbegin();
        Vertex forced = 0;
        for (Vertex w : g.out_neighbors(u))
            if (!black[w]) {
                forced = w;
                break;
            }
        black[forced] = 1;
        state.black.insert(forced);
        state.forces.push_back({u, forced});
        // counts are kept for white vertices too: they need an accurate
        // value the moment they turn black
        for (Vertex x : g.in_neighbors(forced)) {
            --white_out[x];
            if (!black[x]) continue;
            if (white_out[x] == 1)
                eligible.insert(x);
            else
                eligible.erase(x);
        }
        if (white_out[forced] == 1) eligible.insert(forced);
    }
    return state;
}

bool is_zero_forcing_set(const DiGraph& g, const VertexSet& c)
{
    return derived_set(g, c).black.size() == static_cast<std::size_t>(g.vertex_count());
}

bool replays_legally(const DiGraph& g, const VertexSet& initial,
                     const std::vector<Force>& forces)
{
    std::vector<char> black(g.vertex_count() + 1, 0);
    for (Vertex v : initial) {
        if (!g.in_range(v)) return false;
        black[v] = 1;
    }
    for (const Force& f : forces) {
        if (!g.in_range(f.forcer) || !g.in_range(f.forced)) return false;
        if (!black[f.forcer] || black[f.forced]) return false;
        int white = 0;
        for (Vertex w : g.out_neighbors(f.forcer))
            if (!black[w]) ++white;
        if (white != 1 || !g.has_arc(f.forcer, f.forced)) return false;
        black[f.forced] = 1;
    }
    return true;
}

BipartiteGraph::BipartiteGraph(VertexSet left_in, VertexSet right_in,
                               std::vector<Arc> arcs_in)
    : left(std::move(left_in)), right(std::move(right_in)), arcs(std::move(arcs_in))
{
    if (!left.intersected(right).empty())
        throw InputError("bipartite graph: left and right sets overlap");
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (auto [u, v] : arcs)
        if (!left.contains(u) || !right.contains(v))
            throw InputError("bipartite arc (" + std::to_string(u) + "," +
                             std::to_string(v) + ") does not go left to right");
}

BipartiteForcingResult bipartite_forces_all(const BipartiteGraph& b)
{
    std::map<Vertex, std::vector<Vertex>> out, in;
    for (auto [u, v] : b.arcs) {
        out[u].push_back(v);
        in[v].push_back(u);
    }

    std::set<Vertex> white(b.right.begin(), b.right.end());
    std::map<Vertex, int> white_out;
    std::set<Vertex> eligible;
    for (Vertex u : b.left) {
        white_out[u] = static_cast<int>(out[u].size());
        if (white_out[u] == 1) eligible.insert(u);
    }

    BipartiteForcingResult result{false, std::nullopt, {}};
    while (!eligible.empty()) {
        Vertex u = *eligible.begin();
        Vertex forced = 0;
        for (Vertex w : out[u])
            if (white.count(w)) {
                forced = w;
                break;
            }
        white.erase(forced);
        result.forces.push_back({u, forced});
        for (Vertex x : in[forced]) {
            if (--white_out[x] == 1)
                eligible.insert(x);
            else
                eligible.erase(x);
        }
    }
    result.all_forced = white.empty();
    if (!result.all_forced) result.first_unforced = *white.begin();
    return result;
}

DiGraph embed_bipartite(const BipartiteGraph& b)
{
    Vertex n = 0;
    for (Vertex v : b.left) n = std::max(n, v);
    for (Vertex v : b.right) n = std::max(n, v);
    return DiGraph(n, b.arcs);
}

} // namespace targetctl
