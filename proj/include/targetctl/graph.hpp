#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace targetctl {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Extended nonnegative integer: a finite hop count or infinity.
/// Infinity compares greater than every finite value and absorbs addition.
class Distance {
public:
    static constexpr Distance infinite() { return Distance(kInfinite); }
    static constexpr Distance finite(std::int64_t hops) { return Distance(hops); }

    constexpr bool is_infinite() const { return hops_ == kInfinite; }
    constexpr bool is_finite() const { return hops_ != kInfinite; }

    /// Finite hop count; must not be called on an infinite distance.
    std::int64_t hops() const;

    constexpr Distance operator+(Distance other) const
    {
        if (is_infinite() || other.is_infinite()) return infinite();
        return finite(hops_ + other.hops_);
    }

    friend constexpr bool operator==(Distance a, Distance b) = default;
    friend constexpr auto operator<=>(Distance a, Distance b)
    {
        // kInfinite is the largest representable value, so raw comparison works.
        return a.hops_ <=> b.hops_;
    }

    std::string to_string() const;

private:
    static constexpr std::int64_t kInfinite = INT64_MAX;
    explicit constexpr Distance(std::int64_t hops) : hops_(hops) {}
    std::int64_t hops_;
};

/// Ordered set of vertex ids, stored sorted ascending. The ordering is
/// load-bearing: greedy tie-breaks and lexicographic comparisons of
/// solutions all read members in this order.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static VertexSet closed_range(Vertex lo, Vertex hi);

    bool contains(Vertex v) const;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    const std::vector<Vertex>& members() const { return members_; }

    void insert(Vertex v);
    void erase(Vertex v);

    VertexSet united(const VertexSet& other) const;
    VertexSet intersected(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    /// Lexicographic on the sorted member lists.
    friend auto operator<=>(const VertexSet& a, const VertexSet& b)
    {
        return a.members_ <=> b.members_;
    }

    std::string to_string() const;

private:
    std::vector<Vertex> members_;
};

/// Simple directed graph without self-loops; vertices are 1..n.
/// Immutable after construction and safe to share across threads.
class DiGraph {
public:
    /// Validates: endpoints in 1..n, no self-loops, no duplicate arcs.
    /// Throws InputError otherwise.
    DiGraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    /// All arcs, sorted ascending.
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const Vertex> out_neighbors(Vertex u) const;
    std::span<const Vertex> in_neighbors(Vertex v) const;
    bool has_arc(Vertex u, Vertex v) const;

    bool in_range(Vertex v) const { return v >= 1 && v <= n_; }
    /// Throws InputError if v is outside 1..n.
    void require_vertex(Vertex v) const;
    /// Throws InputError if any member is outside 1..n.
    void require_subset(const VertexSet& s, const char* role) const;

    VertexSet vertices() const { return VertexSet::closed_range(1, n_); }

    friend bool operator==(const DiGraph& a, const DiGraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_;
    // Dense rows for n <= 64; empty above that, where has_arc falls back to
    // binary search in the sorted adjacency lists.
    std::vector<std::uint64_t> dense_rows_;
};

/// Shortest directed path length from u to v (0 when u == v,
/// infinite when v is unreachable). Throws InputError on bad vertices.
Distance distance(const DiGraph& g, Vertex u, Vertex v);

/// BFS layer of distances from a single source, indexed by vertex id
/// (slot 0 unused).
std::vector<Distance> distances_from(const DiGraph& g, Vertex u);

/// Multi-source BFS: d(s, j) = min over members of s. Indexed by vertex id.
std::vector<Distance> distances_from_set(const DiGraph& g, const VertexSet& s);

/// min_{i in s} d(i, j). Throws InputError when s is empty.
Distance set_distance(const DiGraph& g, const VertexSet& s, Vertex j);

} // namespace targetctl
