#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mengerian/multigraph.hpp"

namespace mengerian {

/// Edge labels indexed by EdgeId. Every label is >= 1.
class TimeFunction {
public:
    TimeFunction() = default;
    explicit TimeFunction(std::vector<Label> labels);

    std::size_t size() const { return labels_.size(); }
    Label operator[](EdgeId e) const { return labels_[e.index()]; }
    Label at(EdgeId e) const;
    std::span<const Label> labels() const { return labels_; }
    /// T = max label, 0 for an empty function.
    Label lifetime() const;

    friend bool operator==(const TimeFunction&, const TimeFunction&) = default;

private:
    std::vector<Label> labels_;
};

class TemporalGraph {
public:
    TemporalGraph() : graph_(std::make_shared<Multigraph>()) {}
    TemporalGraph(Multigraph graph, TimeFunction times);
    TemporalGraph(std::shared_ptr<const Multigraph> graph, TimeFunction times);

    const Multigraph& graph() const { return *graph_; }
    const std::shared_ptr<const Multigraph>& shared_graph() const { return graph_; }
    const TimeFunction& times() const { return times_; }
    Label label(EdgeId e) const { return times_.at(e); }
    Label lifetime() const { return times_.lifetime(); }

private:
    std::shared_ptr<const Multigraph> graph_;
    TimeFunction times_;
};

/// v_1, e_1, v_2, ..., e_{k-1}, v_k. A walk with distinct vertices is a path.
struct TemporalWalk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    VertexId source() const { return vertices.front(); }
    VertexId target() const { return vertices.back(); }
    bool is_path() const;
    friend bool operator==(const TemporalWalk&, const TemporalWalk&) = default;
};

using TemporalPath = TemporalWalk;

/// Checks endpoints and label monotonicity; throws ValidationError with the
/// index of the first bad edge.
TemporalWalk validate_walk(const TemporalGraph& tg, std::vector<VertexId> vertices, std::vector<EdgeId> edges);
TemporalWalk validate_walk(const TemporalGraph& tg, const TemporalWalk& walk);

/// Keeps the first arrival at each vertex and jumps to its last departure.
TemporalPath walk_to_path(const TemporalGraph& tg, const TemporalWalk& walk);

struct ArrivalTimes {
    VertexId source;
    /// nullopt = unreachable; the source itself has arrival 0.
    std::vector<std::optional<Label>> arrival;
    std::vector<std::optional<EdgeId>> via;

    bool reaches(VertexId v) const { return arrival[v.index()].has_value(); }
    /// A temporal path realising the earliest arrival at `v`.
    std::optional<TemporalPath> path_to(const Multigraph& g, VertexId v) const;
};

ArrivalTimes earliest_arrival(const TemporalGraph& tg, VertexId s);

/// Labels become T + 1 - label.
TemporalGraph reverse(const TemporalGraph& tg);

struct TemporalRestriction {
    TemporalGraph graph;
    std::vector<VertexId> host_vertex;
    std::vector<EdgeId> host_edge;
};

/// (G - S, lambda) with surviving vertices renumbered densely.
TemporalRestriction remove_vertices(const TemporalGraph& tg, std::span<const VertexId> removed);
/// (G - F, lambda); vertex ids are kept.
TemporalRestriction remove_edges(const TemporalGraph& tg, std::span<const EdgeId> removed);

/// Ranks 1..k of the distinct labels, ties preserved.
TimeFunction canonical_labels(const TimeFunction& times);

}  // namespace mengerian
