// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mengerian/io.hpp"
#include "mengerian/menger.hpp"
#include "mengerian/recognizer.hpp"
#include "oracles.hpp"

using namespace mengerian;

namespace {

constexpr double kPaperValueSeconds = 1.0;
constexpr double kForwardSeconds = 60.0;
constexpr double kConverseSeconds = 1800.0;
constexpr double kScaleSeconds = 10.0;
constexpr std::size_t kForwardCases = 100;
constexpr std::size_t kMaxOps = 4;
constexpr std::size_t kTemporalInstances = 200;
constexpr std::size_t kCrossedSamples = 100000;
constexpr std::size_t kScaleSeeds = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_passed = true;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    all_passed = all_passed && ok;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << x;
    return out.str();
}

void paper_values() {
    bool ok = true;
    double slowest = 0;
    std::string values;
    for (PatternId id : kAllPatterns) {
        const Pattern& f = pattern(id);
        auto start = Clock::now();
        MengerGap gap = menger_gap(TemporalGraph(f.graph, f.bad_labeling), f.s, f.t);
        double took = seconds_since(start);
        slowest = std::max(slowest, took);
        ok = ok && gap.p == 1 && gap.c == 2 && took < kPaperValueSeconds;
        values += std::string(to_string(id)) + " p=" + std::to_string(gap.p) + " c=" + std::to_string(gap.c) + "; ";
    }
    report(1, "paper values", ok, values + "slowest " + fmt(slowest) + " s (limit " + fmt(kPaperValueSeconds) + " s)");
}

void forward_characterisation() {
    auto start = Clock::now();
    std::size_t good = 0, verified = 0;
    bool ok = true;
    for (PatternId id : kAllPatterns) {
        Verdict v = recognize(pattern(id).graph);
        ok = ok && v.evidence && v.evidence->pattern == id && !embedding_error(pattern(id).graph, *v.evidence);
    }
    for (std::size_t i = 0; i < kForwardCases; ++i) {
        PatternId id = kAllPatterns[i % kAllPatterns.size()];
        Multigraph g = random_m_subdivision(id, i % (kMaxOps + 1), 1000 + i);
        Proof proof = recognize_with_proof(g);
        if (!proof.verdict.evidence || embedding_error(g, *proof.verdict.evidence)) continue;
        ++good;
        if (proof.witness && proof.check.status == WitnessCheck::Status::Verified && proof.check.p && proof.check.c &&
            *proof.check.p < *proof.check.c)
            ++verified;
    }
    double took = seconds_since(start);
    ok = ok && good == kForwardCases && verified == kForwardCases && took < kForwardSeconds;
    report(2, "forward characterisation", ok,
           "patterns recognised; " + std::to_string(good) + "/" + std::to_string(kForwardCases) +
               " m-subdivisions non-Mengerian, " + std::to_string(verified) + " witnesses verified; " + fmt(took) +
               " s (limit " + fmt(kForwardSeconds) + " s)");
}

void converse_characterisation() {
    auto start = Clock::now();
    std::size_t graphs = 0, disagreements = 0, mengerian = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Multigraph& g : oracle::connected_multigraphs(n, 6)) {
            ++graphs;
            const bool recognised = recognize(g).mengerian();
            FalsifyOptions options;
            options.mode = Exhaustive{6};
            const bool refuted = falsify_mengerian(g, options).has_value();
            if (recognised == refuted) ++disagreements;
            mengerian += recognised;
        }
    }
    double took = seconds_since(start);
    report(3, "converse characterisation", disagreements == 0 && took < kConverseSeconds,
           std::to_string(graphs) + " connected multigraphs (<= 5 vertices, <= 6 edges), " + std::to_string(mengerian) +
               " Mengerian, " + std::to_string(disagreements) + " disagreements; " + fmt(took) + " s (limit " +
               fmt(kConverseSeconds) + " s)");
}

struct Instance {
    TemporalGraph tg;
    VertexId s, t;
};

std::vector<Instance> temporal_instances() {
    std::mt19937_64 rng(20240101);
    std::vector<Instance> out;
    while (out.size() < kTemporalInstances) {
        const std::size_t n = 2 + rng() % 6;
        Multigraph g = oracle::random_multigraph(rng, n, 1 + rng() % 12, 3);
        std::vector<Label> labels;
        for (std::size_t e = 0; e < g.edge_count(); ++e) labels.push_back(1 + static_cast<Label>(rng() % g.edge_count()));
        VertexId s(rng() % n), t(rng() % n);
        if (s == t || g.edge_count() == 0) continue;
        out.push_back({TemporalGraph(g, TimeFunction(labels)), s, t});
    }
    return out;
}

void berman(const std::vector<Instance>& instances) {
    std::size_t mismatches = 0;
    for (const Instance& in : instances) {
        const int s = static_cast<int>(in.s.index()), t = static_cast<int>(in.t.index());
        const std::size_t flow = edge_menger(in.tg, in.s, in.t).value;
        if (flow != oracle::p_edge(in.tg.graph(), in.tg.times(), s, t) ||
            flow != oracle::c_edge(in.tg.graph(), in.tg.times(), s, t))
            ++mismatches;
    }
    report(4, "edge-disjoint equality", mismatches == 0,
           std::to_string(instances.size()) + " instances, flow = brute-force paths = brute-force cut on " +
               std::to_string(instances.size() - mismatches) + ", " + std::to_string(mismatches) + " mismatches");
}

void duality(const std::vector<Instance>& instances) {
    std::mt19937_64 rng(77);
    std::size_t violations = 0, deletions = 0;
    for (const Instance& in : instances) {
        const Multigraph& g = in.tg.graph();
        MengerReport r = menger_report(in.tg, in.s, in.t);
        const std::size_t pe = edge_menger(in.tg, in.s, in.t).value;
        if (r.c && r.p > *r.c) ++violations;
        if (r.p > pe) ++violations;

        MengerReport back = menger_report(reverse(in.tg), in.t, in.s);
        if (back.p != r.p || back.c != r.c) ++violations;

        for (int k = 0; k < 3; ++k) {
            std::vector<EdgeId> gone{EdgeId(rng() % g.edge_count())};
            TemporalGraph smaller = remove_edges(in.tg, gone).graph;
            MengerReport after = menger_report(smaller, in.s, in.t);
            const std::size_t pe_after = edge_menger(smaller, in.s, in.t).value;
            ++deletions;
            if (after.p > r.p || pe_after > pe) ++violations;
            if (r.c && after.c && *after.c > *r.c) ++violations;
        }
    }
    report(5, "duality and reversal", violations == 0,
           std::to_string(instances.size()) + " instances, " + std::to_string(deletions) + " deletions, " +
               std::to_string(violations) + " violations");
}

void crossed() {
    // z0 = 0, z1 = 1, h1 = 2, h2 = 3, h3 = 4, h4 = 5: K3,3 with the chain z0-z1 doubled.
    Multigraph small =
        Multigraph::from_pairs(6, {{0, 1}, {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
    // The same with the chain stretched to z0 z1 z2 z3 (z1 = 6, z2 = 7, z3 = 1).
    Multigraph longer = Multigraph::from_pairs(8, {{0, 6}, {0, 6}, {6, 7}, {6, 7}, {7, 1}, {7, 1}, {0, 2}, {0, 4},
                                                   {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
    bool ok = true;
    std::string detail;
    for (const Multigraph* g : {&small, &longer}) {
        Verdict v = recognize(*g);
        FalsifyOptions options;
        options.mode = Randomized{kCrossedSamples, 2024};
        auto start = Clock::now();
        const bool refuted = falsify_mengerian(*g, options).has_value();
        const bool exact = !v.diagnostics.crossed.empty() && v.diagnostics.crossed.front().exact;
        ok = ok && v.mengerian() && v.diagnostics.crossed.size() == 1 && exact && !refuted;
        detail += std::to_string(g->vertex_count()) + " vertices: " + (v.mengerian() ? "Mengerian" : "non-Mengerian") +
                  ", " + std::to_string(v.diagnostics.crossed.size()) + " crossed structure" +
                  (v.diagnostics.crossed.empty() ? "" : std::string(" (") + std::string(to_string(v.diagnostics.crossed.front().kind)) + ")") +
                  ", " + std::to_string(kCrossedSamples) + " samples " + (refuted ? "found a counterexample" : "found nothing") +
                  " in " + fmt(seconds_since(start)) + " s; ";
    }
    report(6, "crossed structure", ok, detail);
}

void scale() {
    double slowest = 0;
    for (std::size_t seed = 1; seed <= kScaleSeeds; ++seed) {
        Multigraph g = random_multigraph(100, 300, 3, seed);
        auto start = Clock::now();
        recognize(g);
        slowest = std::max(slowest, seconds_since(start));
    }
    for (std::size_t seed = 1; seed <= kScaleSeeds; ++seed) {
        Multigraph g = random_multigraph(100, 300, 1, seed);
        auto start = Clock::now();
        recognize(g);
        slowest = std::max(slowest, seconds_since(start));
    }
    report(7, "scale", slowest < kScaleSeconds,
           std::to_string(2 * kScaleSeeds) + " graphs with n = 100, m = 300; slowest " + fmt(slowest) + " s (limit " +
               fmt(kScaleSeconds) + " s)");
}

}  // namespace

int main() {
    paper_values();
    forward_characterisation();
    converse_characterisation();
    auto instances = temporal_instances();
    berman(instances);
    duality(instances);
    crossed();
    scale();
    return all_passed ? 0 : 1;
}
