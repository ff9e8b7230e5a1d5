#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mengerian/patterns.hpp"
#include "mengerian/temporal.hpp"

namespace mengerian {

/// Line-oriented graph text:
///
///     # comment
///     v a
///     e a b 3
///
/// `v <name>` declares a vertex, `e <u> <v> [<label>]` adds one edge (repeat
/// the line for parallel edges). Names used by an edge before any `v` line
/// are declared on first use. Labels are given on every edge or on none.
struct GraphFile {
    Multigraph graph;
    std::optional<TimeFunction> times;
};

/// Throws ParseError with the 1-based line number.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

/// Vertices and edges in id order, so parsing the output restores the ids.
std::string emit_graph(const Multigraph& g, const TimeFunction* times = nullptr);

/// Graphviz drawing; each parallel edge is drawn separately, embedding
/// segments are coloured and branch vertices filled.
std::string to_dot(const Multigraph& g, const MEmbedding* embedding = nullptr);

/// `m` edges spread over random pairs of `n` vertices, at most `max_mult`
/// per pair. Throws ArgumentError when they cannot fit.
Multigraph random_multigraph(std::size_t n, std::size_t m, std::size_t max_mult, std::uint64_t seed);

/// The pattern after `ops` m-subdivisions of random adjacent pairs.
Multigraph random_m_subdivision(PatternId id, std::size_t ops, std::uint64_t seed);

}  // namespace mengerian
