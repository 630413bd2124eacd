#include "targetctl/realization.hpp"

#include "targetctl/errors.hpp"

#include <random>
#include <utility>
#include <vector>

namespace targetctl {

SelectionMatrix::SelectionMatrix(int ambient_size, VertexSet chosen)
    : ambient(ambient_size), columns(std::move(chosen)) {
    for (Vertex v : columns) {
        if (v < 1 || v > ambient) {
            throw InputError("selection vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(ambient));
        }
    }
}

RatMatrix SelectionMatrix::dense() const {
    RatMatrix p(ambient, static_cast<int>(columns.size()));
    int col = 0;
    for (Vertex v : columns) {
        p.at(v - 1, col++) = 1;
    }
    return p;
}

RatMatrix SelectionMatrix::dense_transposed() const {
    RatMatrix p(static_cast<int>(columns.size()), ambient);
    int row = 0;
    for (Vertex v : columns) {
        p.at(row++, v - 1) = 1;
    }
    return p;
}

bool in_qualitative_class(const DiGraph& g, const RatMatrix& x) {
    const int n = g.vertex_count();
    if (x.rows() != n || x.cols() != n) {
        return false;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const bool arc = g.has_arc(j + 1, i + 1);
            const bool nonzero = x.at(i, j) != 0;
            if (arc != nonzero) {
                return false;
            }
        }
    }
    return true;
}

Realization::Realization(DiGraph g, RatMatrix x, VertexSet leader_set, VertexSet target_set)
    : graph(std::move(g)),
      state(std::move(x)),
      leaders(std::move(leader_set)),
      targets(std::move(target_set)) {
    if (leaders.empty()) {
        throw InputError("leader set must be nonempty");
    }
    if (targets.empty()) {
        throw InputError("target set must be nonempty");
    }
    graph.require_subset(leaders, "leaders");
    graph.require_subset(targets, "targets");
    if (!in_qualitative_class(graph, state)) {
        throw InputError("state matrix support does not match the graph");
    }
}

RatMatrix Realization::input_matrix() const {
    return SelectionMatrix(order(), leaders).dense();
}

RatMatrix Realization::output_matrix() const {
    return SelectionMatrix(order(), targets).dense_transposed();
}

bool is_distance_preserving(const Realization& r) {
    const DiGraph& g = r.graph;
    const int n = g.vertex_count();
    std::vector<std::vector<Distance>> dist(static_cast<size_t>(n) + 1);
    for (Vertex u = 1; u <= n; ++u) {
        dist[u] = distances_from(g, u);
    }
    auto [m, scale] = clear_denominators(r.state);
    (void)scale;
    IntMatrix power = m;
    bool preserving = true;
    for (int k = 1; k <= n - 1; ++k) {
        const Distance dk = Distance::finite(k);
        for (Vertex j = 1; j <= n; ++j) {
            for (Vertex i = 1; i <= n; ++i) {
                if (i == j) {
                    continue;
                }
                const Distance d = dist[j][i];
                const bool zero = power.at(i - 1, j - 1) == 0;
                if (d > dk && !zero) {
                    throw InternalError(
                        "zero-pattern invariant violated: (X^" + std::to_string(k) +
                        ")[" + std::to_string(i) + "," + std::to_string(j) +
                        "] nonzero although d(" + std::to_string(j) + "," +
                        std::to_string(i) + ") > " + std::to_string(k));
                }
                if (d == dk && zero) {
                    preserving = false;
                }
            }
        }
        if (!preserving) {
            return false;
        }
        if (k < n - 1) {
            power = power * m;
        }
    }
    return true;
}

std::string to_string(SamplePolicy policy) {
    switch (policy) {
    case SamplePolicy::Adjacency: return "adjacency";
    case SamplePolicy::Laplacian: return "laplacian";
    case SamplePolicy::Random: return "random";
    }
    throw InternalError("unknown sample policy");
}

namespace {

RatMatrix pattern_matrix(const DiGraph& g) {
    RatMatrix x(g.vertex_count(), g.vertex_count());
    for (const Arc& a : g.arcs()) {
        x.at(a.second - 1, a.first - 1) = 1;
    }
    return x;
}

// Nonzero integer in [-bound, bound], from a single uniform draw.
long draw_nonzero(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<long> dist(1, 2L * bound);
    const long v = dist(rng);
    return v <= bound ? v : bound - v;
}

long draw_any(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<long> dist(-static_cast<long>(bound), bound);
    return dist(rng);
}

} // namespace

Realization sample_qd(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets,
                      uint64_t seed, SamplePolicy policy, const SampleParams& params) {
    const int n = g.vertex_count();
    if (policy == SamplePolicy::Adjacency || policy == SamplePolicy::Laplacian) {
        RatMatrix x = pattern_matrix(g);
        if (policy == SamplePolicy::Laplacian) {
            for (Vertex v = 1; v <= n; ++v) {
                x.at(v - 1, v - 1) = -static_cast<long>(g.out_neighbors(v).size());
            }
        }
        Realization r(g, std::move(x), leaders, targets);
        if (!is_distance_preserving(r)) {
            throw SamplingError(to_string(policy) +
                                " realization failed the distance-preservation check");
        }
        return r;
    }

    std::mt19937_64 rng(seed);
    RatMatrix base(n, n);
    for (const Arc& a : g.arcs()) {
        base.at(a.second - 1, a.first - 1) = draw_nonzero(rng, params.weight_bound);
    }
    for (Vertex v = 1; v <= n; ++v) {
        base.at(v - 1, v - 1) = draw_any(rng, params.weight_bound);
    }
    for (int attempt = 0; attempt < params.retry_cap; ++attempt) {
        std::vector<long> diag(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            diag[j] = draw_nonzero(rng, params.weight_bound);
        }
        RatMatrix x = base;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                x.at(i, j) *= diag[j];
            }
        }
        Realization r(g, std::move(x), leaders, targets);
        if (is_distance_preserving(r)) {
            return r;
        }
    }
    throw SamplingError("no distance-information-preserving realization after " +
                        std::to_string(params.retry_cap) + " diagonal rescalings (seed " +
                        std::to_string(seed) + ")");
}

} // namespace targetctl
