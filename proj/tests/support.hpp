#pragma once

#include <string>
#include <vector>

#include "mengerian/patterns.hpp"
#include "oracles.hpp"

namespace support {

using namespace mengerian;

inline VertexId named(const Multigraph& g, const std::string& name) {
    auto v = g.find(name);
    if (!v) throw std::invalid_argument("no vertex named " + name);
    return *v;
}

inline oracle::Counts gem_counts() { return oracle::counts_of(pattern(PatternId::F3).graph); }

inline Multigraph path_graph(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(VertexId(i), VertexId(i + 1));
    return Multigraph(n, edges);
}

inline Multigraph cycle_graph(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(VertexId(i), VertexId((i + 1) % n));
    return Multigraph(n, edges);
}

/// Each edge of `g` replaced by a path of `k` + 1 edges.
inline Multigraph subdivide_all(const Multigraph& g, std::size_t k) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t next = g.vertex_count();
    for (const Edge& e : g.edges()) {
        VertexId prev = e.u;
        for (std::size_t i = 0; i < k; ++i) {
            VertexId mid(next++);
            edges.emplace_back(prev, mid);
            prev = mid;
        }
        edges.emplace_back(prev, e.v);
    }
    return Multigraph(next, edges);
}

/// `g` plus one fresh pendant vertex per anchor.
inline Multigraph with_pendants(const Multigraph& g, const std::vector<VertexId>& anchors) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    std::size_t next = g.vertex_count();
    for (VertexId a : anchors) edges.emplace_back(a, VertexId(next++));
    return Multigraph(next, edges);
}

inline std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Multigraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

inline bool gem_by_brute_force(const Multigraph& g) { return oracle::has_m_minor(g, pattern(PatternId::F3).graph); }

inline bool forbidden_by_brute_force(const Multigraph& g) {
    for (PatternId id : kAllPatterns)
        if (oracle::has_m_minor(g, pattern(id).graph)) return true;
    return false;
}

}  // namespace support
