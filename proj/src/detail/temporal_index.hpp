#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "mengerian/temporal.hpp"

namespace mengerian::detail {

using Mask = std::uint64_t;

inline Mask bit(VertexId v) { return Mask{1} << v.index(); }

/// Edges grouped by label for repeated reachability queries on graphs with
/// at most 64 vertices.
class TemporalIndex {
public:
    struct Arc {
        std::uint8_t u;
        std::uint8_t v;
        Label label;
        EdgeId id;
    };

    explicit TemporalIndex(const TemporalGraph& tg);

    std::size_t vertex_count() const { return n_; }

    /// Whether a temporal s,t-walk avoids every vertex in `removed` and
    /// every edge whose bit is set in `removed_edges` (edge masks need <= 64 edges).
    bool reaches(VertexId s, VertexId t, Mask removed, Mask removed_edges = 0) const;

    /// Neighbour lists with the parallel edges to each neighbour sorted by label.
    struct Hop {
        VertexId to;
        std::vector<std::pair<Label, EdgeId>> edges;
    };
    const std::vector<Hop>& hops(VertexId v) const { return hops_[v.index()]; }

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> group_start_;  // arcs_ index where each label group begins, plus end
    std::vector<std::vector<Hop>> hops_;
};

}  // namespace mengerian::detail
