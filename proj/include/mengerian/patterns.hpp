#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mengerian/multigraph.hpp"
#include "mengerian/temporal.hpp"

namespace mengerian {

enum class PatternId { F1, F2, F3 };

std::string_view to_string(PatternId id);
std::optional<PatternId> parse_pattern_id(std::string_view text);
inline constexpr std::array<PatternId, 3> kAllPatterns{PatternId::F1, PatternId::F2, PatternId::F3};

/// One forbidden pattern with its Menger pair and a labelling giving p = 1, c = 2.
struct Pattern {
    PatternId id;
    Multigraph graph;
    VertexId s;
    VertexId t;
    TimeFunction bad_labeling;
};

const Pattern& pattern(PatternId id);

/// Image of one pattern multiedge {pattern_u, pattern_v} (pattern_u < pattern_v):
/// a host path from branch_map[pattern_u] to branch_map[pattern_v] whose every
/// hop carries exactly as many chosen edges as the pattern multiedge has.
struct Segment {
    VertexId pattern_u;
    VertexId pattern_v;
    std::vector<VertexId> path;
    std::vector<std::vector<EdgeId>> hops;  // hops[i]: edges between path[i] and path[i+1], sorted
};

struct MEmbedding {
    PatternId pattern = PatternId::F1;
    std::vector<VertexId> branch_map;  // pattern vertex -> host vertex
    std::vector<Segment> segments;     // ordered by (pattern_u, pattern_v)

    std::vector<EdgeId> edges() const;
    std::vector<VertexId> vertices() const;
    VertexId source() const;  // image of the pattern's s
    VertexId target() const;  // image of the pattern's t
};

/// Structural check of an embedding against a host; nullopt when valid,
/// otherwise a description of the first violation.
std::optional<std::string> embedding_error(const Multigraph& host, const MEmbedding& embedding);

/// Renames an embedding found in `sub.graph` into the ids of the graph `sub` was taken from.
MEmbedding lift_to_host(const MEmbedding& embedding, const Subgraph& sub);

/// Whether `h` as a whole is an m-subdivision of the pattern; exact.
std::optional<MEmbedding> is_m_subdivision(const Multigraph& h, const Pattern& f);

/// is_m_subdivision applied to the subgraph formed by `edges`, reported in host ids.
std::optional<MEmbedding> certify_subgraph(const Multigraph& host, std::span<const EdgeId> edges, const Pattern& f);

/// Exhaustive search for an m-subdivision of `f` anywhere in `host`.
/// Exponential in the number of vertices of simple degree >= 3; meant for
/// hosts made of a few long threads.
std::optional<MEmbedding> find_m_topological_minor(const Multigraph& host, const Pattern& f);

/// Gem subdivision with the given apex in a simple graph, or nullopt.
std::optional<MEmbedding> find_f3_with_apex(const Multigraph& g, VertexId apex);

/// Gem subdivision anywhere in a simple graph; apexes are tried in id order.
/// Throws ArgumentError for graphs with parallel edges.
std::optional<MEmbedding> find_f3_subdivision(const Multigraph& g);

/// Union of two cycles through the chain and a path between them, checked and
/// certified as an F1 m-subdivision. Cycles and path are given as edge lists.
MEmbedding assemble_f1(const Multigraph& g, const Chain& chain, std::span<const EdgeId> c1,
                       std::span<const EdgeId> c2, std::span<const EdgeId> j);

/// Two vertex-disjoint cycles at the chain ends plus a path between them, certified as F2.
MEmbedding assemble_f2(const Multigraph& g, const Chain& chain, std::span<const EdgeId> c0,
                       std::span<const EdgeId> cq, std::span<const EdgeId> j);

/// Two attachment vertices and the vertices strictly between them. An empty
/// vertex set means the part is a plain multiedge.
struct CrossedPart {
    VertexId first;
    VertexId second;
    std::vector<VertexId> vertices;
};

struct CrossedStructure {
    enum class Kind { OneCrossed, TwoCrossed };

    std::array<VertexId, 4> h;  // h1, h3 next to chain.front(); h2, h4 next to chain.back()
    Chain chain;
    CrossedPart a1;  // h1 - h2
    CrossedPart a2;  // h3 - h4
    CrossedPart b2;  // h2 - h3
    std::optional<CrossedPart> b1;  // h1 - h4
    Kind kind = Kind::OneCrossed;
    /// Every vertex is in the chain, an h, or a part, and parts touch the rest
    /// of the graph only at their attachments.
    bool exact = false;
};

std::string_view to_string(CrossedStructure::Kind kind);

/// Attachment invariant: edges leaving a part end at its attachments.
bool parts_are_attached_only_at_ends(const Multigraph& g, const CrossedStructure& cs);

/// Renames a structure found in `sub.graph` into host ids.
CrossedStructure lift_to_host(const CrossedStructure& cs, const Subgraph& sub);

using ChainOutcome = std::variant<MEmbedding, CrossedStructure>;

/// Resolves a chain whose identification creates a gem subdivision. Requires
/// g 2-connected, no gem subdivision in U(g), internal chain vertices of
/// simple degree 2, and a gem subdivision after identifying the chain;
/// throws ContractError otherwise.
ChainOutcome helpcrossed(const Multigraph& g, const Chain& chain);

/// As helpcrossed, but returns nullopt when identifying the chain creates no
/// gem subdivision.
std::optional<ChainOutcome> examine_chain(const Multigraph& g, const Chain& chain);

/// Crossed structures met while examining every chain of every gem-free block.
std::vector<CrossedStructure> find_crossed_structures(const Multigraph& g);

}  // namespace mengerian
