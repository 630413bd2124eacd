#pragma once

#include "targetctl/graph.hpp"
#include "targetctl/matrix.hpp"

#include <cstdint>
#include <string>

namespace targetctl {

/// The n x r matrix P(V; V') whose columns are the standard basis vectors
/// of the chosen vertices, in ascending order. Kept symbolic; dense() and
/// dense_transposed() materialize it when a product is needed.
struct SelectionMatrix {
    int ambient = 0;
    VertexSet columns;

    SelectionMatrix(int ambient_size, VertexSet chosen);

    RatMatrix dense() const;
    RatMatrix dense_transposed() const;
};

/// Does the off-diagonal support of x match the arcs of g exactly?
/// x must be n x n for an n-vertex graph; entry (i,j) may be nonzero for
/// i != j only when the arc (j, i) exists, and must be nonzero whenever it
/// does. Diagonal entries are unconstrained.
bool in_qualitative_class(const DiGraph& g, const RatMatrix& x);

/// A system realization: weights x over graph g together with the leader
/// and target selections. Construction validates that x lies in the
/// qualitative class of g and that both vertex sets are nonempty subsets.
struct Realization {
    DiGraph graph;
    RatMatrix state;
    VertexSet leaders;
    VertexSet targets;

    Realization(DiGraph g, RatMatrix x, VertexSet leader_set, VertexSet target_set);

    int order() const { return graph.vertex_count(); }
    int leader_count() const { return static_cast<int>(leaders.size()); }
    int target_count() const { return static_cast<int>(targets.size()); }

    RatMatrix input_matrix() const;  // U = P(V; leaders)
    RatMatrix output_matrix() const; // H = P(V; targets)^T
};

/// Does the realization preserve distance information: for every ordered
/// pair with d(j, i) = k >= 1, is (X^k)_{ij} nonzero? Also sanity-checks
/// the complementary zero pattern (d(j, i) > k forces (X^k)_{ij} = 0,
/// a consequence of the support condition) and throws InternalError if
/// that ever fails.
bool is_distance_preserving(const Realization& r);

enum class SamplePolicy {
    Adjacency,
    Laplacian,
    Random,
};

std::string to_string(SamplePolicy policy);

struct SampleParams {
    int weight_bound = 10;
    int retry_cap = 50;
};

/// Draw one distance-information-preserving realization.
///
/// Adjacency: X_{ij} = 1 iff (j, i) is an arc, zero diagonal.
/// Laplacian: adjacency pattern with X_{jj} = -outdeg(j).
/// Random:    integer arc weights and free diagonal in [-W, W] (arc weights
///            nonzero), then a nonzero diagonal scaling X * Dbar; the
///            scaling is resampled until the product preserves distance
///            information, up to retry_cap attempts.
///
/// Every returned realization is verified with is_distance_preserving.
/// Throws SamplingError when the retry cap is exhausted.
Realization sample_qd(const DiGraph& g, const VertexSet& leaders, const VertexSet& targets,
                      uint64_t seed, SamplePolicy policy, const SampleParams& params = {});

} // namespace targetctl
