#include "targetctl/leader_selection.hpp"

#include "targetctl/errors.hpp"
#include "targetctl/partition.hpp"
#include "targetctl/zero_forcing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

namespace targetctl {

CoverInstance build_cover(const DiGraph& g, const VertexSet& targets) {
    if (targets.empty()) {
        throw InputError("target set must be nonempty");
    }
    g.require_subset(targets, "targets");
    CoverInstance inst;
    inst.ambient = g.vertex_count();
    inst.targets = targets;
    inst.row_cover.reserve(targets.size());
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()) + 1);
    for (Vertex t : targets) {
        std::fill(seen.begin(), seen.end(), 0);
        std::deque<Vertex> queue{t};
        seen[t] = 1;
        std::vector<Vertex> reaching;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            reaching.push_back(v);
            for (Vertex u : g.in_neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        inst.row_cover.emplace_back(std::move(reaching));
    }
    return inst;
}

namespace {

// Row subsets as multiword bitmasks, indexed by target position.
using Mask = std::vector<std::uint64_t>;

Mask empty_mask(int rows) {
    return Mask(static_cast<size_t>(rows + 63) / 64, 0);
}

void mask_set(Mask& m, int i) {
    m[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

bool mask_none(const Mask& m) {
    for (std::uint64_t w : m) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

int mask_count(const Mask& m) {
    int c = 0;
    for (std::uint64_t w : m) {
        c += std::popcount(w);
    }
    return c;
}

int mask_count_and(const Mask& a, const Mask& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        c += std::popcount(a[i] & b[i]);
    }
    return c;
}

void mask_remove(Mask& m, const Mask& removed) {
    for (size_t i = 0; i < m.size(); ++i) {
        m[i] &= ~removed[i];
    }
}

bool mask_test(const Mask& m, int i) {
    return (m[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
}

struct CoverSearch {
    // Candidate columns in ascending vertex order; each covers >= 1 row.
    std::vector<Vertex> columns;
    std::vector<Mask> column_rows;
    int rows = 0;

    explicit CoverSearch(const CoverInstance& inst) {
        rows = static_cast<int>(inst.targets.size());
        std::vector<Mask> by_vertex(static_cast<size_t>(inst.ambient) + 1, empty_mask(rows));
        for (int k = 0; k < rows; ++k) {
            for (Vertex v : inst.row_cover[static_cast<size_t>(k)]) {
                mask_set(by_vertex[static_cast<size_t>(v)], k);
            }
        }
        for (Vertex v = 1; v <= inst.ambient; ++v) {
            if (!mask_none(by_vertex[static_cast<size_t>(v)])) {
                columns.push_back(v);
                column_rows.push_back(std::move(by_vertex[static_cast<size_t>(v)]));
            }
        }
    }

    VertexSet greedy() const {
        Mask uncovered = empty_mask(rows);
        for (int k = 0; k < rows; ++k) {
            mask_set(uncovered, k);
        }
        std::vector<Vertex> chosen;
        while (!mask_none(uncovered)) {
            int best_gain = 0;
            size_t best_col = columns.size();
            for (size_t c = 0; c < columns.size(); ++c) {
                int gain = mask_count_and(column_rows[c], uncovered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_col = c;
                }
            }
            if (best_col == columns.size()) {
                throw InternalError("uncoverable row in root-set instance");
            }
            chosen.push_back(columns[best_col]);
            mask_remove(uncovered, column_rows[best_col]);
        }
        return VertexSet(std::move(chosen));
    }

    // Exact branch and bound. Branches on the hardest uncovered row; sibling
    // branches ban the earlier columns of that row, so every cover is
    // visited exactly once. Prunes on size only, which keeps all optima
    // reachable for lexicographic selection and enumeration.
    void search_all(bool collect_all) {
        best_size_ = static_cast<int>(greedy().size());
        Mask uncovered = empty_mask(rows);
        for (int k = 0; k < rows; ++k) {
            mask_set(uncovered, k);
        }
        std::vector<char> banned(columns.size(), 0);
        std::vector<Vertex> chosen;
        collect_all_ = collect_all;
        recurse(uncovered, banned, chosen);
        std::sort(solutions_.begin(), solutions_.end());
    }

    const std::vector<VertexSet>& solutions() const { return solutions_; }

private:
    int best_size_ = 0;
    bool collect_all_ = false;
    std::vector<VertexSet> solutions_;

    void recurse(const Mask& uncovered, const std::vector<char>& banned,
                 std::vector<Vertex>& chosen) {
        if (mask_none(uncovered)) {
            accept(chosen);
            return;
        }
        int max_gain = 0;
        for (size_t c = 0; c < columns.size(); ++c) {
            if (!banned[c]) {
                max_gain = std::max(max_gain, mask_count_and(column_rows[c], uncovered));
            }
        }
        if (max_gain == 0) {
            return;
        }
        const int lower = (mask_count(uncovered) + max_gain - 1) / max_gain;
        if (static_cast<int>(chosen.size()) + lower > best_size_) {
            return;
        }
        // Hardest row: fewest usable columns, smallest row index on ties.
        int row = -1;
        int row_options = 0;
        for (int k = 0; k < rows; ++k) {
            if (!mask_test(uncovered, k)) {
                continue;
            }
            int options = 0;
            for (size_t c = 0; c < columns.size(); ++c) {
                if (!banned[c] && mask_test(column_rows[c], k)) {
                    ++options;
                }
            }
            if (row < 0 || options < row_options) {
                row = k;
                row_options = options;
            }
        }
        if (row_options == 0) {
            return;
        }
        std::vector<char> child_banned = banned;
        for (size_t c = 0; c < columns.size(); ++c) {
            if (banned[c] || !mask_test(column_rows[c], row)) {
                continue;
            }
            Mask child_uncovered = uncovered;
            mask_remove(child_uncovered, column_rows[c]);
            chosen.push_back(columns[c]);
            child_banned[c] = 1;
            recurse(child_uncovered, child_banned, chosen);
            chosen.pop_back();
        }
    }

    void accept(const std::vector<Vertex>& chosen) {
        VertexSet candidate{std::vector<Vertex>(chosen)};
        const int size = static_cast<int>(candidate.size());
        if (size > best_size_) {
            return;
        }
        if (size < best_size_) {
            best_size_ = size;
            solutions_.clear();
            solutions_.push_back(std::move(candidate));
            return;
        }
        if (collect_all_) {
            solutions_.push_back(std::move(candidate));
        } else if (solutions_.empty() || candidate < solutions_.front()) {
            solutions_.assign(1, std::move(candidate));
        }
    }
};

bool exact_allowed(const CoverInstance& inst, const MinRootOptions& options) {
    return !options.heuristic_only && inst.ambient <= options.exact_threshold;
}

} // namespace

RootSet min_root_set(const CoverInstance& instance, const MinRootOptions& options) {
    CoverSearch search(instance);
    if (!exact_allowed(instance, options)) {
        return {search.greedy(), false};
    }
    search.search_all(false);
    if (search.solutions().empty()) {
        throw InternalError("exact root-set search found no cover");
    }
    return {search.solutions().front(), true};
}

RootSet min_root_set(const DiGraph& g, const VertexSet& targets, const MinRootOptions& options) {
    return min_root_set(build_cover(g, targets), options);
}

std::vector<VertexSet> all_min_root_sets(const CoverInstance& instance,
                                         const MinRootOptions& options) {
    if (!exact_allowed(instance, options)) {
        throw InputError("enumerating all minimum root sets requires the exact solver; raise "
                         "the exact threshold or drop the heuristic flag");
    }
    CoverSearch search(instance);
    search.search_all(true);
    return search.solutions();
}

std::vector<VertexSet> all_min_root_sets(const DiGraph& g, const VertexSet& targets,
                                         const MinRootOptions& options) {
    return all_min_root_sets(build_cover(g, targets), options);
}

SelectionResult select_leaders(const DiGraph& g, const VertexSet& targets,
                               const MinRootOptions& options) {
    SelectionResult result;
    result.initial = min_root_set(g, targets, options);
    VertexSet leaders = result.initial.roots;
    for (;;) {
        ForcingState ds = derived_set(g, leaders);
        result.trace.push_back(
            {TraceEvent::Kind::Derived, leaders, ds.black, 0, 0});
        DistancePartition part = partition_targets(g, ds.black, targets);
        if (!part.unreachable.empty()) {
            throw InternalError("root cover left a target unreachable: " +
                                part.unreachable.to_string());
        }
        bool restarted = false;
        for (int i = 1; i <= part.depth(); ++i) {
            if (part.layer(i).empty()) {
                continue;
            }
            BipartiteGraph layer_graph = build_layer_graph(g, ds.black, part.layer(i), i);
            BipartiteForcingResult res = bipartite_forces_all(layer_graph);
            if (res.all_forced) {
                result.trace.push_back({TraceEvent::Kind::LayerPass, leaders, {}, i, 0});
                continue;
            }
            const Vertex added = *res.first_unforced;
            result.trace.push_back({TraceEvent::Kind::LayerFail, leaders, {}, i, added});
            leaders.insert(added);
            result.trace.push_back({TraceEvent::Kind::AddLeader, leaders, {}, 0, added});
            restarted = true;
            break;
        }
        if (!restarted) {
            result.leaders = std::move(leaders);
            return result;
        }
    }
}

} // namespace targetctl
