#include "targetctl/controllability.hpp"
#include "targetctl/errors.hpp"
#include "targetctl/graph_io.hpp"
#include "targetctl/leader_selection.hpp"
#include "targetctl/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace targetctl;
using nlohmann::json;

struct RunConfig {
    std::string input;
    std::string format = "json";
    std::string leaders_spec;
    std::string targets_spec;
    std::uint64_t seed = 0;
    int budget = 200;
    bool json_output = false;
    int exact_threshold = 40;
};

VertexSet parse_vertex_spec(const std::string& spec) {
    std::vector<Vertex> members;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) {
            throw InputError("empty entry in vertex list '" + spec + "'");
        }
        const auto parse_int = [&](const std::string& text) {
            size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(text, &used);
            } catch (const std::exception&) {
                throw InputError("bad vertex '" + text + "' in list '" + spec + "'");
            }
            if (used != text.size()) {
                throw InputError("bad vertex '" + text + "' in list '" + spec + "'");
            }
            return value;
        };
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            members.push_back(parse_int(token));
            continue;
        }
        const int lo = parse_int(token.substr(0, dots));
        const int hi = parse_int(token.substr(dots + 2));
        if (lo > hi) {
            throw InputError("empty range '" + token + "' in vertex list");
        }
        for (int v = lo; v <= hi; ++v) {
            members.push_back(v);
        }
    }
    if (members.empty()) {
        throw InputError("vertex list '" + spec + "' is empty");
    }
    return VertexSet(std::move(members));
}

std::string read_input(const RunConfig& cfg) {
    if (cfg.input.empty() || cfg.input == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) {
        throw InputError("cannot open input file '" + cfg.input + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Problem {
    DiGraph graph;
    std::optional<VertexSet> leaders;
    std::optional<VertexSet> targets;
};

Problem load_problem(const RunConfig& cfg) {
    GraphFormat fmt;
    if (cfg.format == "json") {
        fmt = GraphFormat::Json;
    } else if (cfg.format == "edgelist") {
        fmt = GraphFormat::EdgeList;
    } else {
        throw InputError("unknown format '" + cfg.format + "' (expected json or edgelist)");
    }
    GraphFile file = load_graph(read_input(cfg), fmt);
    Problem p{std::move(file.graph), std::move(file.leaders), std::move(file.targets)};
    if (!cfg.leaders_spec.empty()) {
        p.leaders = parse_vertex_spec(cfg.leaders_spec);
    }
    if (!cfg.targets_spec.empty()) {
        p.targets = parse_vertex_spec(cfg.targets_spec);
    }
    if (p.leaders) {
        p.graph.require_subset(*p.leaders, "leaders");
    }
    if (p.targets) {
        p.graph.require_subset(*p.targets, "targets");
    }
    return p;
}

VertexSet require_leaders(const Problem& p) {
    if (!p.leaders) {
        throw InputError("no leader set: pass --leaders or embed \"leaders\" in the input");
    }
    return *p.leaders;
}

VertexSet targets_or_all(const Problem& p) {
    return p.targets ? *p.targets : p.graph.vertices();
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

int run_zf(const RunConfig& cfg, bool check) {
    Problem p = load_problem(cfg);
    const VertexSet initial = p.leaders.value_or(VertexSet{});
    p.graph.require_subset(initial, "initial set");
    ForcingState st = derived_set(p.graph, initial);
    const bool zfs = st.black == p.graph.vertices();
    if (cfg.json_output) {
        emit({{"initial", to_json(st.initial)},
              {"derived", to_json(st.black)},
              {"forces", to_json(st.forces)},
              {"zero_forcing_set", zfs}});
    } else {
        std::cout << "initial: " << st.initial.to_string() << "\n";
        std::cout << "derived: " << st.black.to_string() << "\n";
        for (const Force& f : st.forces) {
            std::cout << "  " << f.forcer << " -> " << f.forced << "\n";
        }
        std::cout << "zero forcing set: " << (zfs ? "yes" : "no") << "\n";
    }
    return (check && !zfs) ? 1 : 0;
}

std::string bipartite_dot(const BipartiteGraph& b, int index) {
    std::ostringstream out;
    out << "digraph layer_" << index << " {\n";
    out << "  rankdir=LR;\n";
    for (Vertex v : b.left) {
        out << "  L" << v << " [label=\"" << v
            << "\", style=filled, fillcolor=black, fontcolor=white];\n";
    }
    for (Vertex v : b.right) {
        out << "  R" << v << " [label=\"" << v << "\"];\n";
    }
    for (const Arc& a : b.arcs) {
        out << "  L" << a.first << " -> R" << a.second << ";\n";
    }
    out << "}\n";
    return out.str();
}

int run_layers(const RunConfig& cfg, const std::string& dot_dir) {
    Problem p = load_problem(cfg);
    const VertexSet leaders = require_leaders(p);
    const VertexSet targets = targets_or_all(p);
    ForcingState ds = derived_set(p.graph, leaders);
    DistancePartition part = partition_targets(p.graph, ds.black, targets);
    std::vector<BipartiteGraph> graphs;
    for (int i = 1; i <= part.depth(); ++i) {
        graphs.push_back(build_layer_graph(p.graph, ds.black, part.layer(i), i));
    }
    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (int i = 1; i <= part.depth(); ++i) {
            const auto path =
                std::filesystem::path(dot_dir) / ("layer_" + std::to_string(i) + ".dot");
            std::ofstream out(path);
            if (!out) {
                throw InputError("cannot write '" + path.string() + "'");
            }
            out << bipartite_dot(graphs[static_cast<size_t>(i - 1)], i);
        }
    }
    if (cfg.json_output) {
        json layers = json::array();
        for (int i = 1; i <= part.depth(); ++i) {
            json arcs = json::array();
            for (const Arc& a : graphs[static_cast<size_t>(i - 1)].arcs) {
                arcs.push_back({a.first, a.second});
            }
            layers.push_back({{"index", i},
                              {"vertices", to_json(part.layer(i))},
                              {"arcs", std::move(arcs)}});
        }
        emit({{"derived", to_json(ds.black)},
              {"already_controlled", to_json(targets.intersected(ds.black))},
              {"layers", std::move(layers)},
              {"unreachable", to_json(part.unreachable)}});
    } else {
        std::cout << "derived: " << ds.black.to_string() << "\n";
        const VertexSet inside = targets.intersected(ds.black);
        if (!inside.empty()) {
            std::cout << "already controlled: " << inside.to_string() << "\n";
        }
        for (int i = 1; i <= part.depth(); ++i) {
            std::cout << "V_" << i << " = " << part.layer(i).to_string() << "; arcs:";
            for (const Arc& a : graphs[static_cast<size_t>(i - 1)].arcs) {
                std::cout << " (" << a.first << "," << a.second << ")";
            }
            std::cout << "\n";
        }
        if (!part.unreachable.empty()) {
            std::cout << "unreachable: " << part.unreachable.to_string() << "\n";
        }
    }
    return 0;
}

void print_certificate_human(const Certificate& c) {
    if (const auto* s = std::get_if<SufficientEvidence>(&c)) {
        std::cout << "derived set: " << s->derived.black.to_string() << "\n";
        if (!s->already_controlled.empty()) {
            std::cout << "targets inside derived set: " << s->already_controlled.to_string()
                      << "\n";
        }
        for (const auto& layer : s->layers) {
            std::cout << "layer " << layer.index << ": all " << layer.graph.right.size()
                      << " vertices forced\n";
        }
    } else if (const auto* o = std::get_if<LayerObstruction>(&c)) {
        std::cout << "layer " << o->index << ": vertex " << o->first_unforced
                  << " cannot be forced\n";
    } else if (const auto* u = std::get_if<UnreachableTargets>(&c)) {
        std::cout << "targets unreachable from the leaders: " << u->targets.to_string() << "\n";
    } else if (const auto* v = std::get_if<NecessaryViolation>(&c)) {
        std::cout << "leaders plus non-targets stall; unforced: " << v->unforced.to_string()
                  << "\n";
    } else if (const auto* h = std::get_if<NecessaryHolds>(&c)) {
        std::cout << "leaders plus non-targets form a zero forcing set\n";
        (void)h;
    } else if (const auto* w = std::get_if<RankWitness>(&c)) {
        std::cout << "witness: rank " << w->rank << " < " << w->target_count << " ("
                  << to_string(w->policy) << " policy, attempt " << w->attempt << ")\n";
    } else if (const auto* e = std::get_if<SamplingEvidence>(&c)) {
        std::cout << e->full_rank << " of " << e->samples << " samples had full rank\n";
    }
}

int run_check(const RunConfig& cfg, bool sufficient, bool necessary) {
    Problem p = load_problem(cfg);
    const VertexSet leaders = require_leaders(p);
    const VertexSet targets = targets_or_all(p);
    Verdict v = sufficient  ? check_sufficient(p.graph, leaders, targets)
                : necessary ? check_necessary(p.graph, leaders, targets)
                            : combined_verdict(p.graph, leaders, targets, cfg.budget, cfg.seed);
    if (cfg.json_output) {
        emit(to_json(v));
    } else {
        std::cout << "status: " << to_string(v.status) << "\n";
        print_certificate_human(v.certificate);
        if (v.samples > 0) {
            std::cout << "samples: " << v.samples << " (seed " << v.seed << ")\n";
        }
    }
    return v.status == Status::Negative ? 1 : 0;
}

int run_rank(const RunConfig& cfg, const std::string& policy_name) {
    Problem p = load_problem(cfg);
    const VertexSet leaders = require_leaders(p);
    const VertexSet targets = targets_or_all(p);
    SamplePolicy policy;
    if (policy_name == "adjacency") {
        policy = SamplePolicy::Adjacency;
    } else if (policy_name == "laplacian") {
        policy = SamplePolicy::Laplacian;
    } else if (policy_name == "random") {
        policy = SamplePolicy::Random;
    } else {
        throw InputError("unknown policy '" + policy_name + "'");
    }
    Realization r = sample_qd(p.graph, leaders, targets, cfg.seed, policy);
    const int rank = output_ctrb_rank(r);
    if (cfg.json_output) {
        emit({{"policy", to_string(policy)},
              {"seed", cfg.seed},
              {"rank", rank},
              {"target_count", r.target_count()},
              {"full", rank == r.target_count()}});
    } else {
        std::cout << "rank " << rank << " of " << r.target_count() << " (policy "
                  << to_string(policy) << ", seed " << cfg.seed << ")\n";
    }
    return 0;
}

int run_witness(const RunConfig& cfg) {
    Problem p = load_problem(cfg);
    const VertexSet leaders = require_leaders(p);
    const VertexSet targets = targets_or_all(p);
    auto w = falsify_strong_tc(p.graph, leaders, targets, cfg.budget, cfg.seed);
    if (w) {
        emit({{"witness",
               {{"policy", to_string(w->policy)},
                {"attempt", w->attempt},
                {"rank", w->rank},
                {"target_count", w->target_count},
                {"realization", to_json(w->realization)}}},
              {"samples", w->attempt},
              {"seed", cfg.seed}});
        return 1;
    }
    if (cfg.json_output) {
        emit({{"witness", nullptr}, {"samples", cfg.budget}, {"seed", cfg.seed}});
    } else {
        std::cout << "no rank-deficient realization in " << cfg.budget << " samples (seed "
                  << cfg.seed << ")\n";
    }
    return 0;
}

int run_rootset(const RunConfig& cfg, bool all_optima, bool heuristic) {
    Problem p = load_problem(cfg);
    const VertexSet targets = targets_or_all(p);
    MinRootOptions opts{cfg.exact_threshold, heuristic};
    RootSet rs = min_root_set(p.graph, targets, opts);
    std::vector<VertexSet> optima;
    if (all_optima) {
        optima = all_min_root_sets(p.graph, targets, opts);
    }
    if (cfg.json_output) {
        json doc = to_json(rs);
        if (all_optima) {
            json arr = json::array();
            for (const VertexSet& s : optima) {
                arr.push_back(to_json(s));
            }
            doc["optima"] = std::move(arr);
        }
        emit(doc);
    } else {
        std::cout << "roots: " << rs.roots.to_string() << " ("
                  << (rs.optimal ? "minimum" : "heuristic") << ")\n";
        if (all_optima) {
            std::cout << "all optima (" << optima.size() << "):\n";
            for (const VertexSet& s : optima) {
                std::cout << "  " << s.to_string() << "\n";
            }
        }
    }
    return 0;
}

int run_select(const RunConfig& cfg, bool verify, const std::string& trace_path,
               bool heuristic) {
    Problem p = load_problem(cfg);
    const VertexSet targets = targets_or_all(p);
    MinRootOptions opts{cfg.exact_threshold, heuristic};
    SelectionResult res = select_leaders(p.graph, targets, opts);
    std::vector<Vertex> added;
    for (const TraceEvent& e : res.trace) {
        if (e.kind == TraceEvent::Kind::AddLeader) {
            added.push_back(e.vertex);
        }
    }
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) {
            throw InputError("cannot write trace file '" + trace_path + "'");
        }
        out << to_json(res.trace).dump(2) << "\n";
    }
    std::optional<Verdict> verdict;
    if (verify) {
        verdict = combined_verdict(p.graph, res.leaders, targets, cfg.budget, cfg.seed);
    }
    if (cfg.json_output) {
        json doc = {{"leaders", to_json(res.leaders)},
                    {"initial", to_json(res.initial)},
                    {"added", json(added)}};
        if (verdict) {
            doc["verified"] = to_string(verdict->status);
        }
        emit(doc);
    } else {
        std::cout << "leaders: " << res.leaders.to_string() << "\n";
        std::cout << "initial roots: " << res.initial.roots.to_string() << " ("
                  << (res.initial.optimal ? "minimum" : "heuristic") << ")\n";
        if (!added.empty()) {
            std::cout << "added:";
            for (Vertex v : added) {
                std::cout << " " << v;
            }
            std::cout << "\n";
        }
        if (verdict) {
            std::cout << "verified: " << to_string(verdict->status) << "\n";
        }
    }
    if (verify && verdict->status != Status::Positive) {
        return 1;
    }
    return 0;
}

int run_export_dot(const RunConfig& cfg) {
    Problem p = load_problem(cfg);
    std::cout << export_dot(p.graph, p.leaders.value_or(VertexSet{}),
                            p.targets.value_or(VertexSet{}));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong targeted controllability toolkit for leader-follower networks"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--input", cfg.input, "input graph file ('-' or omitted: stdin)");
    app.add_option("--format", cfg.format, "input format: json or edgelist")
        ->default_str("json");
    app.add_option("--leaders", cfg.leaders_spec, "leader set, e.g. 1,2 or 1..4,9");
    app.add_option("--targets", cfg.targets_spec, "target set, e.g. 1..8");
    app.add_option("--seed", cfg.seed, "RNG seed for sampling")
        ->envname("TARGETCTL_SEED");
    app.add_option("--budget", cfg.budget, "sampling budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json_output, "machine-readable JSON output");
    app.add_option("--exact-threshold", cfg.exact_threshold,
                   "largest vertex count solved exactly in root-set search");

    auto* zf = app.add_subcommand("zf", "derived set and chronological force list");
    bool zf_check = false;
    zf->add_flag("--check", zf_check, "exit 1 unless the initial set is zero forcing");

    auto* layers = app.add_subcommand("layers", "distance layers and bipartite layer graphs");
    std::string dot_dir;
    layers->add_option("--dot", dot_dir, "write one DOT file per layer into this directory");

    auto* check = app.add_subcommand("check", "controllability verdict");
    bool only_sufficient = false;
    bool only_necessary = false;
    bool full = false;
    auto* s_flag = check->add_flag("--sufficient", only_sufficient, "sufficient condition only");
    auto* n_flag = check->add_flag("--necessary", only_necessary, "necessary condition only");
    auto* f_flag = check->add_flag("--full", full, "both conditions plus sampling (default)");
    s_flag->excludes(n_flag)->excludes(f_flag);
    n_flag->excludes(f_flag);

    auto* rank = app.add_subcommand("rank", "output controllability rank of one realization");
    std::string policy_name = "adjacency";
    rank->add_option("--policy", policy_name, "adjacency, laplacian, or random")
        ->default_str("adjacency");

    auto* witness = app.add_subcommand("witness", "search for a rank-deficient realization");

    auto* rootset = app.add_subcommand("rootset", "minimum root set covering the targets");
    bool all_optima = false;
    bool heuristic = false;
    rootset->add_flag("--all-optima", all_optima, "enumerate every minimum root set");
    rootset->add_flag("--heuristic", heuristic, "greedy cover instead of the exact solver");

    auto* select = app.add_subcommand("select", "leader selection with greedy augmentation");
    bool verify = false;
    std::string trace_path;
    bool select_heuristic = false;
    select->add_flag("--verify", verify, "re-check the sufficient condition on the result");
    select->add_option("--trace", trace_path, "write the selection trace as JSON to this file");
    select->add_flag("--heuristic", select_heuristic,
                     "greedy root cover instead of the exact solver");

    auto* export_dot_cmd = app.add_subcommand("export-dot", "DOT rendering of the graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (zf->parsed()) {
            return run_zf(cfg, zf_check);
        }
        if (layers->parsed()) {
            return run_layers(cfg, dot_dir);
        }
        if (check->parsed()) {
            return run_check(cfg, only_sufficient, only_necessary);
        }
        if (rank->parsed()) {
            return run_rank(cfg, policy_name);
        }
        if (witness->parsed()) {
            return run_witness(cfg);
        }
        if (rootset->parsed()) {
            return run_rootset(cfg, all_optima, heuristic);
        }
        if (select->parsed()) {
            return run_select(cfg, verify, trace_path, select_heuristic);
        }
        if (export_dot_cmd->parsed()) {
            return run_export_dot(cfg);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SamplingError& e) {
        std::cerr << "sampling error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
