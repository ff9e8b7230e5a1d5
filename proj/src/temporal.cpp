#include "mengerian/temporal.hpp"

#include <algorithm>
#include <numeric>

#include "mengerian/errors.hpp"

namespace mengerian {

TimeFunction::TimeFunction(std::vector<Label> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] < 1) throw ArgumentError("label of edge " + std::to_string(i) + " must be >= 1");
}

Label TimeFunction::at(EdgeId e) const {
    if (e.index() >= labels_.size()) throw ArgumentError("no label for edge " + std::to_string(e.value));
    return labels_[e.index()];
}

Label TimeFunction::lifetime() const {
    return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

TemporalGraph::TemporalGraph(Multigraph graph, TimeFunction times)
    : TemporalGraph(std::make_shared<const Multigraph>(std::move(graph)), std::move(times)) {}

TemporalGraph::TemporalGraph(std::shared_ptr<const Multigraph> graph, TimeFunction times)
    : graph_(std::move(graph)), times_(std::move(times)) {
    if (times_.size() != graph_->edge_count())
        throw ArgumentError("time function covers " + std::to_string(times_.size()) + " edges, graph has " +
                            std::to_string(graph_->edge_count()));
}

bool TemporalWalk::is_path() const {
    std::vector<VertexId> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

TemporalWalk validate_walk(const TemporalGraph& tg, std::vector<VertexId> vertices, std::vector<EdgeId> edges) {
    const Multigraph& g = tg.graph();
    if (vertices.empty()) throw ValidationError(0, "walk has no vertices");
    if (vertices.size() != edges.size() + 1) throw ValidationError(edges.size(), "vertex and edge counts disagree");
    for (VertexId v : vertices)
        if (!g.contains(v)) throw ValidationError(0, "unknown vertex " + std::to_string(v.value));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!g.contains(edges[i])) throw ValidationError(i, "unknown edge " + std::to_string(edges[i].value));
        if (!g.edge(edges[i]).joins(vertices[i], vertices[i + 1]))
            throw ValidationError(i, "edge " + std::to_string(edges[i].value) + " does not join consecutive vertices");
        if (i > 0 && tg.label(edges[i]) < tg.label(edges[i - 1]))
            throw ValidationError(i, "label " + std::to_string(tg.label(edges[i])) + " after " +
                                         std::to_string(tg.label(edges[i - 1])));
    }
    return TemporalWalk{std::move(vertices), std::move(edges)};
}

TemporalWalk validate_walk(const TemporalGraph& tg, const TemporalWalk& walk) {
    return validate_walk(tg, walk.vertices, walk.edges);
}

TemporalPath walk_to_path(const TemporalGraph& tg, const TemporalWalk& walk) {
    validate_walk(tg, walk);
    std::vector<std::size_t> last(tg.graph().vertex_count(), 0);
    for (std::size_t i = 0; i < walk.vertices.size(); ++i) last[walk.vertices[i].index()] = i;
    TemporalPath out;
    std::size_t i = last[walk.vertices.front().index()];
    out.vertices.push_back(walk.vertices[i]);
    while (i + 1 < walk.vertices.size()) {
        out.edges.push_back(walk.edges[i]);
        i = last[walk.vertices[i + 1].index()];
        out.vertices.push_back(walk.vertices[i]);
    }
    return validate_walk(tg, out);
}

std::optional<TemporalPath> ArrivalTimes::path_to(const Multigraph& g, VertexId v) const {
    if (!reaches(v)) return std::nullopt;
    TemporalPath path;
    path.vertices.push_back(v);
    while (via[path.vertices.back().index()]) {
        EdgeId e = *via[path.vertices.back().index()];
        path.edges.push_back(e);
        path.vertices.push_back(g.edge(e).other(path.vertices.back()));
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

ArrivalTimes earliest_arrival(const TemporalGraph& tg, VertexId s) {
    const Multigraph& g = tg.graph();
    g.check(s);
    ArrivalTimes out{s, std::vector<std::optional<Label>>(g.vertex_count()),
                     std::vector<std::optional<EdgeId>>(g.vertex_count())};
    out.arrival[s.index()] = 0;
    std::vector<EdgeId> order(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = EdgeId(i);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return tg.label(a) < tg.label(b); });

    std::size_t begin = 0;
    while (begin < order.size()) {
        const Label tau = tg.label(order[begin]);
        std::size_t end = begin;
        while (end < order.size() && tg.label(order[end]) == tau) ++end;
        // Within one label, reachability spreads transitively; iterate to a fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = begin; i < end; ++i) {
                const Edge& e = g.edge(order[i]);
                for (auto [from, to] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                    if (out.arrival[from.index()] && !out.arrival[to.index()] && *out.arrival[from.index()] <= tau) {
                        out.arrival[to.index()] = tau;
                        out.via[to.index()] = e.id;
                        changed = true;
                    }
                }
            }
        }
        begin = end;
    }
    return out;
}

TemporalGraph reverse(const TemporalGraph& tg) {
    const Label T = tg.lifetime();
    std::vector<Label> labels(tg.times().labels().begin(), tg.times().labels().end());
    for (Label& l : labels) l = T + 1 - l;
    return TemporalGraph(tg.shared_graph(), TimeFunction(std::move(labels)));
}

namespace {

TemporalRestriction restrict(const TemporalGraph& tg, Subgraph sub) {
    std::vector<Label> labels;
    labels.reserve(sub.host_edge.size());
    for (EdgeId e : sub.host_edge) labels.push_back(tg.label(e));
    return TemporalRestriction{TemporalGraph(std::move(sub.graph), TimeFunction(std::move(labels))),
                               std::move(sub.host_vertex), std::move(sub.host_edge)};
}

}  // namespace

TemporalRestriction remove_vertices(const TemporalGraph& tg, std::span<const VertexId> removed) {
    return restrict(tg, remove_vertices(tg.graph(), removed));
}

TemporalRestriction remove_edges(const TemporalGraph& tg, std::span<const EdgeId> removed) {
    return restrict(tg, remove_edges(tg.graph(), removed));
}

TimeFunction canonical_labels(const TimeFunction& times) {
    std::vector<Label> distinct(times.labels().begin(), times.labels().end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Label> ranks;
    ranks.reserve(times.size());
    for (Label l : times.labels())
        ranks.push_back(static_cast<Label>(std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin() + 1));
    return TimeFunction(std::move(ranks));
}

}  // namespace mengerian
