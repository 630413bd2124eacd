#include "targetctl/graph.hpp"

#include "targetctl/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace targetctl {

std::int64_t Distance::hops() const
{
    if (is_infinite()) throw InternalError("Distance::hops() on infinite distance");
    return hops_;
}

std::string Distance::to_string() const
{
    return is_infinite() ? "inf" : std::to_string(hops_);
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members))
{
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::closed_range(Vertex lo, Vertex hi)
{
    VertexSet s;
    for (Vertex v = lo; v <= hi; ++v) s.members_.push_back(v);
    return s;
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v)
{
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v)
{
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::united(const VertexSet& other) const
{
    VertexSet out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const
{
    VertexSet out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const
{
    VertexSet out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ',';
        os << members_[i];
    }
    os << '}';
    return os.str();
}

DiGraph::DiGraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs))
{
    if (n_ < 0) throw InputError("vertex count must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [u, v] = arcs_[i];
        if (!in_range(u) || !in_range(v))
            throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                             "): endpoint out of range 1.." + std::to_string(n_));
        if (u == v)
            throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                             "): self-loops are not allowed");
        if (i > 0 && arcs_[i] == arcs_[i - 1])
            throw InputError("duplicate arc (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
    }
    out_.assign(n_ + 1, {});
    in_.assign(n_ + 1, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
    // out_ is already sorted because arcs_ is.
    if (n_ <= 64) {
        dense_rows_.assign(n_ + 1, 0);
        for (auto [u, v] : arcs_) dense_rows_[u] |= std::uint64_t{1} << (v - 1);
    }
}

std::span<const Vertex> DiGraph::out_neighbors(Vertex u) const
{
    require_vertex(u);
    return out_[u];
}

std::span<const Vertex> DiGraph::in_neighbors(Vertex v) const
{
    require_vertex(v);
    return in_[v];
}

bool DiGraph::has_arc(Vertex u, Vertex v) const
{
    require_vertex(u);
    require_vertex(v);
    if (!dense_rows_.empty())
        return (dense_rows_[u] >> (v - 1)) & 1;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

void DiGraph::require_vertex(Vertex v) const
{
    if (!in_range(v))
        throw InputError("vertex " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n_));
}

void DiGraph::require_subset(const VertexSet& s, const char* role) const
{
    for (Vertex v : s)
        if (!in_range(v))
            throw InputError(std::string(role) + ": vertex " + std::to_string(v) +
                             " out of range 1.." + std::to_string(n_));
}

std::vector<Distance> distances_from(const DiGraph& g, Vertex u)
{
    g.require_vertex(u);
    std::vector<Distance> dist(g.vertex_count() + 1, Distance::infinite());
    std::deque<Vertex> queue{u};
    dist[u] = Distance::finite(0);
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex x : g.out_neighbors(w)) {
            if (dist[x].is_infinite()) {
                dist[x] = dist[w] + Distance::finite(1);
                queue.push_back(x);
            }
        }
    }
    return dist;
}

std::vector<Distance> distances_from_set(const DiGraph& g, const VertexSet& s)
{
    g.require_subset(s, "source set");
    std::vector<Distance> dist(g.vertex_count() + 1, Distance::infinite());
    std::deque<Vertex> queue;
    for (Vertex v : s) {
        dist[v] = Distance::finite(0);
        queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex x : g.out_neighbors(w)) {
            if (dist[x].is_infinite()) {
                dist[x] = dist[w] + Distance::finite(1);
                queue.push_back(x);
            }
        }
    }
    return dist;
}

Distance distance(const DiGraph& g, Vertex u, Vertex v)
{
    g.require_vertex(v);
    return distances_from(g, u)[v];
}

Distance set_distance(const DiGraph& g, const VertexSet& s, Vertex j)
{
    if (s.empty()) throw InputError("set_distance: source set is empty");
    g.require_vertex(j);
    return distances_from_set(g, s)[j];
}

} // namespace targetctl
