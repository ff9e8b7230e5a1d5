// Gem subdivisions with a fixed apex e.
//
// Such a subdivision exists iff some component of G - e holds two
// vertex-disjoint paths whose four ends are distinct neighbours of e. Given
// the paths P1, P2 and a shortest connection R between them (attached at x on
// P1 and y on P2), the rim runs from an end of P1 through x, R, y to an end
// of P2, and the remaining parts of P1 and P2 become the spokes at x and y.
// Conversely, the rim and spokes of a gem subdivision split into two such
// paths at the rim's middle section.

#include <algorithm>
#include <deque>

#include "detail/max_flow.hpp"
#include "mengerian/errors.hpp"
#include "mengerian/patterns.hpp"

namespace mengerian {

namespace {

using Path = std::vector<VertexId>;

/// Two vertex-disjoint paths from terminals other than p, q to p and q,
/// inside the vertices flagged in `inside`.
std::optional<std::pair<Path, Path>> two_terminal_paths(const Multigraph& g, const std::vector<bool>& inside,
                                                        const std::vector<VertexId>& terminals, VertexId p,
                                                        VertexId q) {
    const int n = static_cast<int>(g.vertex_count());
    detail::MaxFlow flow(2 * n + 2);
    const int source = 2 * n, sink = 2 * n + 1;
    auto in = [](VertexId v) { return 2 * static_cast<int>(v.index()); };
    auto out = [](VertexId v) { return 2 * static_cast<int>(v.index()) + 1; };
    for (VertexId v : g.vertices()) {
        if (!inside[v.index()]) continue;
        flow.add_arc(in(v), out(v), 1);
        for (const Neighbor& nb : g.neighbors(v))
            if (inside[nb.vertex.index()]) flow.add_arc(out(v), in(nb.vertex), 1);
    }
    for (VertexId x : terminals)
        if (x != p && x != q) flow.add_arc(source, in(x), 1);
    flow.add_arc(out(p), sink, 1);
    flow.add_arc(out(q), sink, 1);
    if (flow.run(source, sink) < 2) return std::nullopt;
    std::vector<Path> paths;
    for (const auto& unit : flow.decompose(source, sink)) {
        Path path;
        for (int node : unit.nodes)
            if (node < 2 * n && node % 2 == 0) path.push_back(VertexId(static_cast<std::size_t>(node / 2)));
        paths.push_back(std::move(path));
    }
    return std::pair{paths[0], paths[1]};
}

/// Shortest path from a vertex of `from` to a vertex of `to` whose interior
/// avoids both and stays inside `inside`.
Path connect(const Multigraph& g, const std::vector<bool>& inside, const Path& from, const Path& to) {
    std::vector<int> mark(g.vertex_count(), 0);
    for (VertexId v : from) mark[v.index()] = 1;
    for (VertexId v : to) mark[v.index()] = 2;
    std::vector<std::optional<VertexId>> parent(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue;
    Path sorted = from;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v : sorted) {
        seen[v.index()] = true;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.neighbors(x)) {
            VertexId y = nb.vertex;
            if (seen[y.index()] || !inside[y.index()]) continue;
            seen[y.index()] = true;
            parent[y.index()] = x;
            if (mark[y.index()] == 2) {
                Path path{y};
                while (parent[path.back().index()]) path.push_back(*parent[path.back().index()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(y);
        }
    }
    throw ContractError("disjoint paths in one component must be connected");
}

void add_path_edges(const Multigraph& g, const Path& path, std::vector<EdgeId>& edges) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back(g.edges_between(path[i], path[i + 1]).front());
}

std::optional<MEmbedding> build_gem(const Multigraph& g, VertexId apex, const std::vector<bool>& inside, Path p1,
                                    Path p2) {
    Path r = connect(g, inside, p1, p2);
    const VertexId x = r.front(), y = r.back();
    // Orient P1 so that x is not its first vertex; the rim starts there.
    if (p1.front() == x) std::reverse(p1.begin(), p1.end());
    if (p2.front() == y) std::reverse(p2.begin(), p2.end());
    auto xi = std::find(p1.begin(), p1.end(), x) - p1.begin();
    auto yi = std::find(p2.begin(), p2.end(), y) - p2.begin();

    std::vector<EdgeId> edges;
    Path rim(p1.begin(), p1.begin() + xi + 1);
    rim.insert(rim.end(), r.begin() + 1, r.end() - 1);
    for (auto i = yi; i >= 0; --i) rim.push_back(p2[static_cast<std::size_t>(i)]);
    add_path_edges(g, rim, edges);
    add_path_edges(g, Path(p1.begin() + xi, p1.end()), edges);
    add_path_edges(g, Path(p2.begin() + yi, p2.end()), edges);
    for (VertexId end : {p1.front(), p1.back(), p2.front(), p2.back()})
        edges.push_back(g.edges_between(apex, end).front());
    return certify_subgraph(g, edges, pattern(PatternId::F3));
}

}  // namespace

std::optional<MEmbedding> find_f3_with_apex(const Multigraph& g, VertexId apex) {
    g.check(apex);
    if (g.simple_degree(apex) < 4) return std::nullopt;
    Blocked blocked;
    blocked.vertices.assign(g.vertex_count(), false);
    blocked.vertices[apex.index()] = true;
    std::vector<bool> done(g.vertex_count(), false);
    for (const Neighbor& start : g.neighbors(apex)) {
        if (done[start.vertex.index()]) continue;
        std::vector<bool> inside = reachable_set(g, start.vertex, blocked);
        std::vector<VertexId> terminals;
        for (const Neighbor& nb : g.neighbors(apex))
            if (inside[nb.vertex.index()]) {
                terminals.push_back(nb.vertex);
                done[nb.vertex.index()] = true;
            }
        if (terminals.size() < 4) continue;
        for (std::size_t i = 0; i < terminals.size(); ++i) {
            for (std::size_t j = i + 1; j < terminals.size(); ++j) {
                auto paths = two_terminal_paths(g, inside, terminals, terminals[i], terminals[j]);
                if (!paths) continue;
                auto emb = build_gem(g, apex, inside, paths->first, paths->second);
                if (!emb) throw ContractError("assembled gem failed certification");
                return emb;
            }
        }
    }
    return std::nullopt;
}

std::optional<MEmbedding> find_f3_subdivision(const Multigraph& g) {
    if (g.has_multiedges()) throw ArgumentError("gem search needs a simple graph; take the underlying simple graph");
    for (VertexId v : g.vertices())
        if (auto emb = find_f3_with_apex(g, v)) return emb;
    return std::nullopt;
}

}  // namespace mengerian
