#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mengerian/ids.hpp"

namespace mengerian {

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool joins(VertexId a, VertexId b) const { return (u == a && v == b) || (u == b && v == a); }
};

/// One entry of the underlying simple graph's adjacency: a neighbour and
/// every parallel edge leading to it, in increasing id order.
struct Neighbor {
    VertexId vertex;
    std::vector<EdgeId> edges;
};

/// Immutable multigraph with dense vertex and edge ids. Parallel edges are
/// allowed, self-loops are not.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertex_count);
    Multigraph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
               std::vector<std::string> names = {});

    /// Convenience for literals: `Multigraph::from_pairs(3, {{0, 1}, {1, 2}})`.
    static Multigraph from_pairs(std::size_t vertex_count, std::initializer_list<std::pair<int, int>> edges,
                                 std::vector<std::string> names = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<VertexId> vertices() const;
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;

    bool contains(VertexId v) const { return v.index() < vertex_count_; }
    bool contains(EdgeId e) const { return e.index() < edges_.size(); }
    /// Throws ArgumentError for ids outside the graph.
    void check(VertexId v) const;
    void check(EdgeId e) const;

    const std::string& name(VertexId v) const;
    std::span<const std::string> names() const { return names_; }
    std::optional<VertexId> find(const std::string& name) const;

    std::span<const EdgeId> incident_edges(VertexId v) const;
    /// Adjacency of U(G), sorted by neighbour id.
    std::span<const Neighbor> neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    std::span<const EdgeId> edges_between(VertexId u, VertexId v) const;

    std::size_t multiplicity(VertexId u, VertexId v) const;
    std::size_t simple_degree(VertexId v) const;
    std::size_t edge_degree(VertexId v) const;
    std::size_t max_simple_degree() const;
    bool has_multiedges() const;
    bool is_simple() const { return !has_multiedges(); }

private:
    const Neighbor* find_neighbor(VertexId u, VertexId v) const;

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> names_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// A graph derived from a host, with ids translated back to the host.
struct Subgraph {
    Multigraph graph;
    std::vector<VertexId> host_vertex;
    std::vector<EdgeId> host_edge;

    std::optional<VertexId> local_vertex(VertexId host) const;
};

/// Path (z_0, ..., z_q) of U(G) whose consecutive pairs have multiplicity >= 2.
struct Chain {
    std::vector<VertexId> vertices;

    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    std::size_t length() const { return vertices.size() - 1; }
    Chain reversed() const;
    friend bool operator==(const Chain&, const Chain&) = default;
};

struct Identification {
    Multigraph graph;
    VertexId merged;
    std::vector<std::optional<VertexId>> vertex_map;  // old -> new; Z maps to merged
    std::vector<std::optional<EdgeId>> edge_map;      // old -> new; Z-internal edges dropped
    std::vector<VertexId> origin;                     // new -> old; merged maps to the first member of Z
};

struct MSubdivision {
    Multigraph graph;
    VertexId midpoint;
    /// The i-th former u-v edge keeps its id as the u-midpoint edge
    /// `first_half[i]` and gains the midpoint-v edge `second_half[i]`.
    std::vector<EdgeId> first_half;
    std::vector<EdgeId> second_half;
};

std::size_t multiplicity(const Multigraph& g, VertexId u, VertexId v);
std::size_t simple_degree(const Multigraph& g, VertexId v);
std::size_t edge_degree(const Multigraph& g, VertexId v);

/// U(G): the smallest-id edge of every multiedge is kept.
Subgraph underlying_simple(const Multigraph& g);

/// Merges `z` into one fresh vertex (appended last). Edges with exactly one
/// endpoint in `z` are re-attached, edges inside `z` are dropped.
Identification identify(const Multigraph& g, std::span<const VertexId> z);

/// Subdivides every u-v edge and identifies the new vertices.
MSubdivision m_subdivide(const Multigraph& g, VertexId u, VertexId v);

/// Maximal chains whose internal vertices have simple degree 2, one per
/// multiedge class, each oriented from its smaller endpoint.
std::vector<Chain> maximal_chains(const Multigraph& g);

/// Edge-induced subgraph; vertices are the endpoints, in host order.
Subgraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges);
/// G - S for a vertex set S; remaining ids are renumbered densely.
Subgraph remove_vertices(const Multigraph& g, std::span<const VertexId> removed);
/// G - F for an edge set F; vertex ids are unchanged.
Subgraph remove_edges(const Multigraph& g, std::span<const EdgeId> removed);

/// Blocks of U(G) with parallel edges carried along, ordered by smallest
/// host edge id. Isolated vertices belong to no block.
std::vector<Subgraph> biconnected_components(const Multigraph& g);
std::vector<VertexId> articulation_points(const Multigraph& g);

bool is_connected(const Multigraph& g);
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

/// Mask-based restrictions for searches. Empty masks block nothing.
struct Blocked {
    std::vector<bool> vertices;
    std::vector<bool> edges;

    bool vertex(VertexId v) const { return v.index() < vertices.size() && vertices[v.index()]; }
    bool edge(EdgeId e) const { return e.index() < edges.size() && edges[e.index()]; }
};

std::vector<bool> reachable_set(const Multigraph& g, VertexId from, const Blocked& blocked = {});

/// Shortest path (BFS, smallest ids first) from any source to any target,
/// avoiding blocked vertices/edges. Sources and targets must not be blocked.
std::optional<std::vector<VertexId>> find_path(const Multigraph& g, std::span<const VertexId> sources,
                                               std::span<const VertexId> targets, const Blocked& blocked = {});

}  // namespace mengerian
