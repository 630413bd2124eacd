#pragma once

#include "targetctl/partition.hpp"
#include "targetctl/realization.hpp"
#include "targetctl/zero_forcing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace targetctl {

/// Three-valued outcome. POSITIVE and NEGATIVE are proved; UNKNOWN means
/// neither side produced a certificate.
enum class Status { Positive, Negative, Unknown };

std::string to_string(Status s);

/// POSITIVE: the derived set of the leaders forces every target layer in
/// its bipartite distance graph.
struct SufficientEvidence {
    ForcingState derived;
    struct Layer {
        int index;
        BipartiteGraph graph;
        std::vector<Force> forces;
    };
    std::vector<Layer> layers;
    /// Targets inside the derived set itself (handled by the identity block).
    VertexSet already_controlled;
};

/// The sufficient check stalled: in layer `index`, `first_unforced` stayed
/// white. Not a disproof.
struct LayerObstruction {
    int index;
    Vertex first_unforced;
    VertexSet layer;
};

/// NEGATIVE: these targets have no path from the derived set of the
/// leaders, so their rows vanish in every controllability block.
struct UnreachableTargets {
    VertexSet targets;
};

/// NEGATIVE: the leaders plus all non-targets fail to force the graph,
/// which no strongly targeted controllable system allows.
struct NecessaryViolation {
    VertexSet initial;
    VertexSet derived;
    VertexSet unforced;
};

/// The necessary condition holds (not a proof of controllability).
struct NecessaryHolds {
    VertexSet initial;
    std::vector<Force> forces;
};

/// NEGATIVE: a concrete distance-information-preserving realization whose
/// output controllability matrix is rank deficient.
struct RankWitness {
    Realization realization;
    SamplePolicy policy;
    int attempt;
    int rank;
    int target_count;
};

/// UNKNOWN after sampling: every drawn realization had full output rank.
struct SamplingEvidence {
    int samples;
    int full_rank;
    std::optional<LayerObstruction> obstruction;
};

using Certificate = std::variant<std::monostate, SufficientEvidence, LayerObstruction,
                                 UnreachableTargets, NecessaryViolation, NecessaryHolds,
                                 RankWitness, SamplingEvidence>;

struct Verdict {
    Status status;
    Certificate certificate;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Sufficient-direction check. POSITIVE proves strong targeted
/// controllability for the whole distance-information-preserving class;
/// NEGATIVE only when some target is unreachable; otherwise UNKNOWN with
/// the first layer obstruction.
Verdict check_sufficient(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets);

/// Necessary-direction check on the leaders-plus-nontargets forcing set.
/// NEGATIVE disproves controllability; UNKNOWN otherwise.
Verdict check_necessary(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets);

/// rank [HU, HXU, ..., HX^{n-1}U] over the rationals, assembled block by
/// block with an early exit at full row rank.
int output_ctrb_rank(const Realization& r);

/// Deterministic per-attempt seed stream (splitmix-style mix of the base
/// seed and the attempt index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt);

/// Search for a rank-deficient realization: adjacency first, then the
/// out-degree Laplacian, then random draws, `budget` attempts in total.
/// Attempts whose sampling rejects out are skipped, not retried.
std::optional<RankWitness> falsify_strong_tc(const DiGraph& g, const VertexSet& leaders,
                                             const VertexSet& targets, int budget,
                                             std::uint64_t seed,
                                             const SampleParams& params = {});

/// Decision pipeline: sufficient certificate, then unreachability and the
/// necessary condition, then falsification by sampling. UNKNOWN carries the
/// sampling evidence.
Verdict combined_verdict(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets,
                         int budget, std::uint64_t seed, const SampleParams& params = {});

} // namespace targetctl
