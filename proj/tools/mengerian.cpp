// Command-line front end. Exit codes: 0 = Mengerian / nothing found / valid,
// 1 = non-Mengerian / counterexample found / invalid report, 2 = usage,
// parse or runtime error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "mengerian/errors.hpp"
#include "mengerian/io.hpp"
#include "mengerian/menger.hpp"
#include "mengerian/recognizer.hpp"
#include "mengerian/report.hpp"

using namespace mengerian;

namespace {

constexpr const char* kMaxSizeVariable = "MENGERIAN_MAX_SIZE";

std::size_t default_max_size() {
    if (const char* value = std::getenv(kMaxSizeVariable)) {
        try {
            return std::stoul(value);
        } catch (const std::exception&) {
            throw ArgumentError(std::string(kMaxSizeVariable) + " must be a number, got '" + value + "'");
        }
    }
    return OracleLimits{}.max_vertices;
}

VertexId vertex_named(const Multigraph& g, const std::string& name) {
    if (auto v = g.find(name)) return *v;
    throw ArgumentError("no vertex named '" + name + "'");
}

std::string describe_path(const TemporalGraph& tg, const TemporalPath& path) {
    const Multigraph& g = tg.graph();
    std::string out = g.name(path.vertices.front());
    for (std::size_t i = 0; i < path.edges.size(); ++i)
        out += " -[" + std::to_string(tg.label(path.edges[i])) + "]- " + g.name(path.vertices[i + 1]);
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

struct RecognizeArgs {
    std::string path;
    bool proof = false;
    bool json = false;
    std::string dot;
    std::size_t max_size = 0;
};

int run_recognize(const RecognizeArgs& args) {
    GraphFile file = read_graph_file(args.path);
    const Multigraph& g = file.graph;
    Timings timings;
    auto start = std::chrono::steady_clock::now();
    Proof proof{recognize(g), std::nullopt, {}};
    timings.recognize_ms = elapsed_ms(start);
    if (args.proof && !proof.verdict.mengerian()) {
        start = std::chrono::steady_clock::now();
        proof.witness = make_witness(g, *proof.verdict.evidence);
        if (proof.witness) {
            proof.check = verify_witness(g, *proof.witness, OracleLimits{args.max_size});
        } else {
            proof.check.status = WitnessCheck::Status::Failed;
            proof.check.message = "every placement of s and t along their threads is adjacent in the host";
        }
        timings.witness_ms = elapsed_ms(start);
    }

    if (!args.dot.empty()) {
        std::string dot = to_dot(g, proof.verdict.evidence ? &*proof.verdict.evidence : nullptr);
        if (args.dot == "-") {
            std::cout << dot;
        } else {
            std::ofstream out(args.dot);
            if (!out) throw ArgumentError("cannot write " + args.dot);
            out << dot;
        }
    }
    if (args.json) {
        std::cout << report_to_json(g, proof, timings).dump(2) << '\n';
    } else if (args.dot != "-") {
        const Verdict& v = proof.verdict;
        if (v.mengerian()) {
            std::cout << "mengerian\n";
        } else {
            const MEmbedding& emb = *v.evidence;
            const Pattern& f = pattern(emb.pattern);
            std::cout << "non-mengerian: " << to_string(emb.pattern) << " m-topological minor\n";
            for (std::size_t p = 0; p < emb.branch_map.size(); ++p)
                std::cout << "  " << f.graph.name(VertexId(p)) << " -> " << g.name(emb.branch_map[p]) << '\n';
        }
        for (const CrossedStructure& cs : v.diagnostics.crossed)
            std::cout << "crossed structure (" << to_string(cs.kind) << ") on chain " << g.name(cs.chain.front())
                      << ".." << g.name(cs.chain.back()) << '\n';
        if (proof.witness) {
            std::cout << "witness: s = " << g.name(proof.witness->s) << ", t = " << g.name(proof.witness->t) << ", "
                      << to_string(proof.check.status) << " (" << proof.check.message << ")\n";
            std::cout << emit_graph(g, &proof.witness->times);
        } else if (args.proof && !v.mengerian()) {
            std::cout << "witness: " << to_string(proof.check.status) << " (" << proof.check.message << ")\n";
        }
    }
    return proof.verdict.mengerian() ? 0 : 1;
}

struct MengerArgs {
    std::string path, source, target;
    bool edge = false;
    std::size_t max_size = 0;
};

int run_menger(const MengerArgs& args) {
    GraphFile file = read_graph_file(args.path);
    if (!file.times) throw ArgumentError("menger needs a labelled graph file");
    TemporalGraph tg(file.graph, *file.times);
    const Multigraph& g = tg.graph();
    VertexId s = vertex_named(g, args.source), t = vertex_named(g, args.target);
    if (args.edge) {
        EdgeMengerReport r = edge_menger(tg, s, t);
        std::cout << "p' = " << r.value << "\nc' = " << r.edge_cut.size() << '\n';
        for (const TemporalPath& path : r.paths) std::cout << "path: " << describe_path(tg, path) << '\n';
        std::cout << "edge cut:";
        for (EdgeId e : r.edge_cut)
            std::cout << " e" << e.value << "(" << g.name(g.edge(e).u) << "-" << g.name(g.edge(e).v) << ")";
        std::cout << '\n';
        return 0;
    }
    if (g.adjacent(s, t)) throw DomainError("the vertex cut is undefined for adjacent " + args.source + " and " + args.target);
    MengerReport r = menger_report(tg, s, t, OracleLimits{args.max_size});
    std::cout << "p = " << r.p << "\nc = " << *r.c << '\n';
    for (const TemporalPath& path : r.paths) std::cout << "path: " << describe_path(tg, path) << '\n';
    std::cout << "cut:";
    for (VertexId v : r.cut) std::cout << ' ' << g.name(v);
    std::cout << '\n';
    return 0;
}

struct FalsifyArgs {
    std::string path;
    bool exhaustive = false;
    std::size_t max_edges = Exhaustive{}.max_edges;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t max_size = 0;
};

int run_falsify(const FalsifyArgs& args) {
    GraphFile file = read_graph_file(args.path);
    FalsifyOptions options;
    if (args.exhaustive)
        options.mode = Exhaustive{args.max_edges};
    else
        options.mode = Randomized{args.samples, args.seed};
    options.threads = args.threads;
    options.limits.max_vertices = args.max_size;
    auto found = falsify_mengerian(file.graph, options);
    if (!found) {
        std::cout << "no counterexample found\n";
        return 0;
    }
    const Multigraph& g = file.graph;
    std::cout << "# counterexample: s = " << g.name(found->s) << ", t = " << g.name(found->t) << ", p = " << found->p
              << ", c = " << found->c << '\n'
              << emit_graph(g, &found->times);
    return 1;
}

struct GenArgs {
    std::string model = "multigraph";
    std::size_t n = 0, m = 0, max_mult = 1, ops = 0;
    std::string pattern = "F1";
    std::uint64_t seed = 0;
};

int run_gen(const GenArgs& args) {
    if (args.model == "multigraph") {
        std::cout << emit_graph(random_multigraph(args.n, args.m, args.max_mult, args.seed));
    } else {
        auto id = parse_pattern_id(args.pattern);
        if (!id) throw ArgumentError("unknown pattern '" + args.pattern + "'");
        std::cout << emit_graph(random_m_subdivision(*id, args.ops, args.seed));
    }
    return 0;
}

struct CheckArgs {
    std::string path, report;
    std::size_t max_size = 0;
};

int run_check(const CheckArgs& args) {
    GraphFile file = read_graph_file(args.path);
    const Multigraph& g = file.graph;
    std::ifstream in(args.report);
    if (!in) throw ArgumentError("cannot open " + args.report);
    nlohmann::json report;
    try {
        report = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("report is not JSON: ") + e.what());
    }
    bool ok = true;
    if (report.contains("embedding") && !report["embedding"].is_null()) {
        MEmbedding emb = embedding_from_json(report["embedding"]);
        if (auto error = embedding_error(g, emb)) {
            std::cout << "embedding: invalid (" << *error << ")\n";
            ok = false;
        } else {
            std::cout << "embedding: valid " << to_string(emb.pattern) << '\n';
        }
    }
    if (report.contains("witness") && !report["witness"].is_null()) {
        Witness w = witness_from_json(report["witness"]);
        WitnessCheck check = verify_witness(g, w, OracleLimits{args.max_size});
        std::cout << "witness: " << to_string(check.status) << " (" << check.message << ")\n";
        if (check.status == WitnessCheck::Status::Failed) ok = false;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognize Mengerian multigraphs and test temporal Menger properties"};
    app.require_subcommand(1);

    std::size_t max_size = 0;
    try {
        max_size = default_max_size();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    const std::string max_size_help = "vertex limit for the exact oracles (default from " +
                                      std::string(kMaxSizeVariable) + ", else " +
                                      std::to_string(OracleLimits{}.max_vertices) + ")";

    RecognizeArgs rec;
    rec.max_size = max_size;
    auto* recognize_cmd = app.add_subcommand("recognize", "decide whether a multigraph is Mengerian");
    recognize_cmd->add_option("graph", rec.path, "graph file")->required()->check(CLI::ExistingFile);
    recognize_cmd->add_flag("--proof", rec.proof, "attach a verified counterexample witness");
    recognize_cmd->add_flag("--json", rec.json, "print a JSON report");
    recognize_cmd->add_option("--dot", rec.dot, "write a Graphviz drawing ('-' for standard output)");
    recognize_cmd->add_option("--max-size", rec.max_size, max_size_help);

    MengerArgs men;
    men.max_size = max_size;
    auto* menger_cmd = app.add_subcommand("menger", "temporal Menger values of a labelled graph");
    menger_cmd->add_option("graph", men.path, "labelled graph file")->required()->check(CLI::ExistingFile);
    menger_cmd->add_option("--source,-s", men.source, "source vertex")->required();
    menger_cmd->add_option("--target,-t", men.target, "target vertex")->required();
    auto* edge_flag = menger_cmd->add_flag("--edge", men.edge, "edge-disjoint paths and edge cut");
    menger_cmd->add_flag("--vertex", "vertex-disjoint paths and vertex cut (default)")->excludes(edge_flag);
    menger_cmd->add_option("--max-size", men.max_size, max_size_help);

    FalsifyArgs fal;
    fal.max_size = max_size;
    auto* falsify_cmd = app.add_subcommand("falsify", "search for a time-function with p < c");
    falsify_cmd->add_option("graph", fal.path, "graph file (labels ignored)")->required()->check(CLI::ExistingFile);
    auto* exhaustive_flag = falsify_cmd->add_flag("--exhaustive", fal.exhaustive, "every labelling with labels in [m]");
    falsify_cmd->add_option("--max-edges", fal.max_edges, "edge limit for --exhaustive")->capture_default_str();
    auto* samples_opt = falsify_cmd->add_option("--samples", fal.samples, "number of random labellings");
    falsify_cmd->add_option("--seed", fal.seed, "random seed")->capture_default_str();
    falsify_cmd->add_option("--threads", fal.threads, "worker threads, 0 for one per core")->capture_default_str();
    falsify_cmd->add_option("--max-size", fal.max_size, max_size_help);
    exhaustive_flag->excludes(samples_opt);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
    gen_cmd->add_option("--model", gen.model, "multigraph | m-subdivided-pattern")
        ->check(CLI::IsMember({"multigraph", "m-subdivided-pattern"}))
        ->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "vertices");
    gen_cmd->add_option("--m", gen.m, "edges");
    gen_cmd->add_option("--max-mult", gen.max_mult, "largest multiplicity")->capture_default_str();
    gen_cmd->add_option("--pattern", gen.pattern, "F1 | F2 | F3")->capture_default_str();
    gen_cmd->add_option("--ops", gen.ops, "number of m-subdivisions")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();

    CheckArgs chk;
    chk.max_size = max_size;
    auto* check_cmd = app.add_subcommand("check", "re-validate a JSON report against its graph");
    check_cmd->add_option("graph", chk.path, "graph file")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("report", chk.report, "report written by recognize --json")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("--max-size", chk.max_size, max_size_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*recognize_cmd) return run_recognize(rec);
        if (*menger_cmd) return run_menger(men);
        if (*falsify_cmd) {
            if (!fal.exhaustive && samples_opt->count() == 0) throw ArgumentError("falsify needs --exhaustive or --samples");
            if (fal.threads == 0) fal.threads = std::max(1U, std::thread::hardware_concurrency());
            return run_falsify(fal);
        }
        if (*gen_cmd) {
            if (gen.model == "m-subdivided-pattern" && (gen.m != 0 || gen.n != 0))
                throw ArgumentError("--n and --m do not apply to m-subdivided-pattern");
            return run_gen(gen);
        }
        if (*check_cmd) return run_check(chk);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
