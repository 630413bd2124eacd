#include "targetctl/controllability.hpp"

#include "targetctl/errors.hpp"

#include <utility>

namespace targetctl {

std::string to_string(Status s) {
    switch (s) {
    case Status::Positive: return "POSITIVE";
    case Status::Negative: return "NEGATIVE";
    case Status::Unknown: return "UNKNOWN";
    }
    throw InternalError("unknown status");
}

namespace {

void require_problem(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets) {
    if (leaders.empty()) {
        throw InputError("leader set must be nonempty");
    }
    if (targets.empty()) {
        throw InputError("target set must be nonempty");
    }
    g.require_subset(leaders, "leaders");
    g.require_subset(targets, "targets");
}

} // namespace

Verdict check_sufficient(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets) {
    require_problem(g, leaders, targets);
    ForcingState ds = derived_set(g, leaders);
    DistancePartition part = partition_targets(g, ds.black, targets);
    if (!part.unreachable.empty()) {
        return {Status::Negative, UnreachableTargets{part.unreachable}, 0, 0};
    }
    SufficientEvidence ev{std::move(ds), {}, {}};
    ev.already_controlled = targets.intersected(ev.derived.black);
    for (int i = 1; i <= part.depth(); ++i) {
        if (part.layer(i).empty()) {
            continue;
        }
        BipartiteGraph layer_graph = build_layer_graph(g, ev.derived.black, part.layer(i), i);
        BipartiteForcingResult res = bipartite_forces_all(layer_graph);
        if (!res.all_forced) {
            return {Status::Unknown, LayerObstruction{i, *res.first_unforced, part.layer(i)}, 0,
                    0};
        }
        ev.layers.push_back({i, std::move(layer_graph), std::move(res.forces)});
    }
    return {Status::Positive, std::move(ev), 0, 0};
}

Verdict check_necessary(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets) {
    require_problem(g, leaders, targets);
    const VertexSet all = g.vertices();
    VertexSet initial = leaders.united(all.minus(targets));
    ForcingState st = derived_set(g, initial);
    if (st.black == all) {
        return {Status::Unknown, NecessaryHolds{std::move(initial), std::move(st.forces)}, 0, 0};
    }
    VertexSet unforced = all.minus(st.black);
    return {Status::Negative,
            NecessaryViolation{std::move(initial), std::move(st.black), std::move(unforced)}, 0,
            0};
}

int output_ctrb_rank(const Realization& r) {
    const int n = r.order();
    const int m = r.leader_count();
    const int p = r.target_count();
    auto [mx, scale] = clear_denominators(r.state);
    (void)scale;

    // cur = (c X)^k U, built by repeated left multiplication; each block of
    // the controllability matrix is the target rows of cur, and the
    // per-block scalar c^k never changes any rank.
    IntMatrix cur(n, m);
    {
        int col = 0;
        for (Vertex v : r.leaders) {
            cur.at(v - 1, col++) = 1;
        }
    }
    std::vector<IntMatrix> blocks;
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        IntMatrix block(p, m);
        int row = 0;
        for (Vertex t : r.targets) {
            for (int j = 0; j < m; ++j) {
                block.at(row, j) = cur.at(t - 1, j);
            }
            ++row;
        }
        blocks.push_back(std::move(block));
        IntMatrix assembled(p, static_cast<int>(blocks.size()) * m);
        for (size_t b = 0; b < blocks.size(); ++b) {
            for (int i = 0; i < p; ++i) {
                for (int j = 0; j < m; ++j) {
                    assembled.at(i, static_cast<int>(b) * m + j) = blocks[b].at(i, j);
                }
            }
        }
        rank = rank_exact(assembled);
        if (rank == p) {
            return rank;
        }
        if (k < n - 1) {
            cur = mx * cur;
        }
    }
    return rank;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (attempt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::optional<RankWitness> falsify_strong_tc(const DiGraph& g, const VertexSet& leaders,
                                             const VertexSet& targets, int budget,
                                             std::uint64_t seed, const SampleParams& params) {
    require_problem(g, leaders, targets);
    if (budget < 0) {
        throw InputError("sampling budget must be nonnegative");
    }
    const int p = static_cast<int>(targets.size());
    for (int attempt = 1; attempt <= budget; ++attempt) {
        SamplePolicy policy = attempt == 1   ? SamplePolicy::Adjacency
                              : attempt == 2 ? SamplePolicy::Laplacian
                                             : SamplePolicy::Random;
        try {
            Realization r = sample_qd(g, leaders, targets, derive_seed(seed, attempt), policy,
                                      params);
            int rank = output_ctrb_rank(r);
            if (rank < p) {
                return RankWitness{std::move(r), policy, attempt, rank, p};
            }
        } catch (const SamplingError&) {
            continue;
        }
    }
    return std::nullopt;
}

Verdict combined_verdict(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets,
                         int budget, std::uint64_t seed, const SampleParams& params) {
    Verdict suff = check_sufficient(g, leaders, targets);
    if (suff.status != Status::Unknown) {
        return suff;
    }
    Verdict nec = check_necessary(g, leaders, targets);
    if (nec.status == Status::Negative) {
        return nec;
    }
    if (auto witness = falsify_strong_tc(g, leaders, targets, budget, seed, params)) {
        int attempt = witness->attempt;
        return {Status::Negative, std::move(*witness), attempt, seed};
    }
    SamplingEvidence ev{budget, budget, std::nullopt};
    if (auto* obs = std::get_if<LayerObstruction>(&suff.certificate)) {
        ev.obstruction = *obs;
    }
    return {Status::Unknown, std::move(ev), budget, seed};
}

} // namespace targetctl
