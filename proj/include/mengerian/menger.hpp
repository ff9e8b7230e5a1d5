#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mengerian/temporal.hpp"

namespace mengerian {

/// Size guard for the exponential oracles.
struct OracleLimits {
    std::size_t max_vertices = 15;
};

struct PathPacking {
    std::size_t count = 0;
    std::vector<TemporalPath> paths;  // pairwise internally disjoint
};

struct VertexCut {
    std::size_t size = 0;
    std::vector<VertexId> vertices;
};

/// p, c and their certificates. `c` and `cut` are empty when s, t are adjacent.
struct MengerReport {
    std::size_t p = 0;
    std::optional<std::size_t> c;
    std::vector<TemporalPath> paths;
    std::vector<VertexId> cut;
};

struct EdgeMengerReport {
    std::size_t value = 0;
    std::vector<TemporalPath> paths;  // pairwise edge-disjoint
    std::vector<EdgeId> edge_cut;
};

struct MengerGap {
    std::size_t p = 0;
    std::size_t c = 0;
    std::size_t gap = 0;
};

/// Maximum number of internally vertex-disjoint temporal s,t-paths, by
/// exhaustive search. Each direct s-t edge counts as its own path.
PathPacking max_disjoint_paths(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits = {});

/// Minimum temporal s,t vertex cut; subsets are tried by (size, lexicographic ids).
/// Throws DomainError when s and t are adjacent.
VertexCut min_vertex_cut(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits = {});

MengerReport menger_report(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits = {});

/// Edge-disjoint temporal paths and minimum temporal edge cut via max flow on
/// the time-expanded network. Polynomial, no size guard.
EdgeMengerReport edge_menger(const TemporalGraph& tg, VertexId s, VertexId t);

MengerGap menger_gap(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits = {});

struct Counterexample {
    TimeFunction times;
    VertexId s;
    VertexId t;
    std::size_t p = 0;
    std::size_t c = 0;
};

/// First (s, t) in (s, t) order with p < c under `tg`, if any.
std::optional<Counterexample> find_menger_gap(const TemporalGraph& tg, const OracleLimits& limits = {});

/// Every labelling with labels in [m], m = |E|, in lexicographic order. Only
/// rank-canonical labellings are evaluated; the first hit is the same.
struct Exhaustive {
    std::size_t max_edges = 7;
};

/// `samples` labellings drawn uniformly from [m]^m; sample i depends only on (seed, i).
struct Randomized {
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
};

struct FalsifyOptions {
    std::variant<Exhaustive, Randomized> mode = Exhaustive{};
    unsigned threads = 1;
    OracleLimits limits;
};

/// Searches for a time-function refuting the Mengerian property. The result
/// does not depend on `threads`.
std::optional<Counterexample> falsify_mengerian(const Multigraph& g, const FalsifyOptions& options = {});

}  // namespace mengerian
