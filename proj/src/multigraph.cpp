#include "mengerian/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "mengerian/errors.hpp"

namespace mengerian {

namespace {

std::string unique_name(const std::vector<std::string>& taken, std::string wanted) {
    std::unordered_set<std::string> seen(taken.begin(), taken.end());
    if (!seen.contains(wanted)) return wanted;
    for (std::size_t k = 2;; ++k) {
        std::string candidate = wanted + "_" + std::to_string(k);
        if (!seen.contains(candidate)) return candidate;
    }
}

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

EdgeList endpoints_of(const Multigraph& g) {
    EdgeList out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count) : Multigraph(vertex_count, {}, {}) {}

Multigraph::Multigraph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
                       std::vector<std::string> names)
    : vertex_count_(vertex_count), names_(std::move(names)), incidence_(vertex_count), adjacency_(vertex_count) {
    if (names_.empty()) {
        names_.reserve(vertex_count);
        for (std::size_t i = 0; i < vertex_count; ++i) names_.push_back(std::to_string(i));
    } else if (names_.size() != vertex_count) {
        throw ArgumentError("name count does not match vertex count");
    }
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (!contains(u) || !contains(v)) throw ArgumentError("edge endpoint outside the vertex set");
        if (u == v) throw ArgumentError("self-loops are not supported (vertex " + names_[u.index()] + ")");
        EdgeId id(edges_.size());
        edges_.push_back({id, u, v});
        incidence_[u.index()].push_back(id);
        incidence_[v.index()].push_back(id);
    }
    for (std::size_t x = 0; x < vertex_count; ++x) {
        auto& adj = adjacency_[x];
        for (EdgeId e : incidence_[x]) {
            VertexId y = edges_[e.index()].other(VertexId(x));
            auto it = std::lower_bound(adj.begin(), adj.end(), y,
                                       [](const Neighbor& n, VertexId v) { return n.vertex < v; });
            if (it == adj.end() || it->vertex != y) it = adj.insert(it, Neighbor{y, {}});
            it->edges.push_back(e);
        }
    }
}

Multigraph Multigraph::from_pairs(std::size_t vertex_count, std::initializer_list<std::pair<int, int>> edges,
                                  std::vector<std::string> names) {
    EdgeList list;
    for (auto [u, v] : edges) list.emplace_back(VertexId(u), VertexId(v));
    return Multigraph(vertex_count, list, std::move(names));
}

std::vector<VertexId> Multigraph::vertices() const {
    std::vector<VertexId> out(vertex_count_);
    for (std::size_t i = 0; i < vertex_count_; ++i) out[i] = VertexId(i);
    return out;
}

const Edge& Multigraph::edge(EdgeId e) const {
    check(e);
    return edges_[e.index()];
}

void Multigraph::check(VertexId v) const {
    if (!contains(v)) throw ArgumentError("unknown vertex " + std::to_string(v.value));
}

void Multigraph::check(EdgeId e) const {
    if (!contains(e)) throw ArgumentError("unknown edge " + std::to_string(e.value));
}

const std::string& Multigraph::name(VertexId v) const {
    check(v);
    return names_[v.index()];
}

std::optional<VertexId> Multigraph::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return VertexId(static_cast<std::size_t>(it - names_.begin()));
}

std::span<const EdgeId> Multigraph::incident_edges(VertexId v) const {
    check(v);
    return incidence_[v.index()];
}

std::span<const Neighbor> Multigraph::neighbors(VertexId v) const {
    check(v);
    return adjacency_[v.index()];
}

const Neighbor* Multigraph::find_neighbor(VertexId u, VertexId v) const {
    check(u);
    check(v);
    const auto& adj = adjacency_[u.index()];
    auto it = std::lower_bound(adj.begin(), adj.end(), v, [](const Neighbor& n, VertexId x) { return n.vertex < x; });
    if (it == adj.end() || it->vertex != v) return nullptr;
    return &*it;
}

bool Multigraph::adjacent(VertexId u, VertexId v) const { return find_neighbor(u, v) != nullptr; }

std::span<const EdgeId> Multigraph::edges_between(VertexId u, VertexId v) const {
    const Neighbor* n = find_neighbor(u, v);
    if (n == nullptr) return {};
    return n->edges;
}

std::size_t Multigraph::multiplicity(VertexId u, VertexId v) const { return edges_between(u, v).size(); }

std::size_t Multigraph::simple_degree(VertexId v) const { return neighbors(v).size(); }

std::size_t Multigraph::edge_degree(VertexId v) const { return incident_edges(v).size(); }

std::size_t Multigraph::max_simple_degree() const {
    std::size_t best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, adj.size());
    return best;
}

bool Multigraph::has_multiedges() const {
    for (const auto& adj : adjacency_)
        for (const Neighbor& n : adj)
            if (n.edges.size() > 1) return true;
    return false;
}

std::optional<VertexId> Subgraph::local_vertex(VertexId host) const {
    auto it = std::find(host_vertex.begin(), host_vertex.end(), host);
    if (it == host_vertex.end()) return std::nullopt;
    return VertexId(static_cast<std::size_t>(it - host_vertex.begin()));
}

Chain Chain::reversed() const {
    return Chain{std::vector<VertexId>(vertices.rbegin(), vertices.rend())};
}

std::size_t multiplicity(const Multigraph& g, VertexId u, VertexId v) { return g.multiplicity(u, v); }
std::size_t simple_degree(const Multigraph& g, VertexId v) { return g.simple_degree(v); }
std::size_t edge_degree(const Multigraph& g, VertexId v) { return g.edge_degree(v); }

Subgraph underlying_simple(const Multigraph& g) {
    std::vector<EdgeId> kept;
    for (VertexId v : g.vertices())
        for (const Neighbor& n : g.neighbors(v))
            if (v < n.vertex) kept.push_back(n.edges.front());
    std::sort(kept.begin(), kept.end());
    EdgeList list;
    for (EdgeId e : kept) list.emplace_back(g.edge(e).u, g.edge(e).v);
    std::vector<std::string> names(g.names().begin(), g.names().end());
    return Subgraph{Multigraph(g.vertex_count(), list, std::move(names)), g.vertices(), std::move(kept)};
}

Identification identify(const Multigraph& g, std::span<const VertexId> z) {
    if (z.empty()) throw ArgumentError("identify: empty vertex set");
    std::vector<bool> in_z(g.vertex_count(), false);
    for (VertexId v : z) {
        g.check(v);
        in_z[v.index()] = true;
    }
    Identification out;
    out.vertex_map.assign(g.vertex_count(), std::nullopt);
    std::vector<std::string> names;
    for (VertexId v : g.vertices()) {
        if (in_z[v.index()]) continue;
        out.vertex_map[v.index()] = VertexId(out.origin.size());
        out.origin.push_back(v);
        names.push_back(g.name(v));
    }
    out.merged = VertexId(out.origin.size());
    VertexId first = *std::min_element(z.begin(), z.end());
    out.origin.push_back(first);
    std::string merged_name;
    std::vector<VertexId> members(z.begin(), z.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexId v : members) {
        out.vertex_map[v.index()] = out.merged;
        if (!merged_name.empty()) merged_name += "+";
        merged_name += g.name(v);
    }
    names.push_back(unique_name(names, merged_name));

    EdgeList list;
    out.edge_map.assign(g.edge_count(), std::nullopt);
    for (const Edge& e : g.edges()) {
        if (in_z[e.u.index()] && in_z[e.v.index()]) continue;
        out.edge_map[e.id.index()] = EdgeId(list.size());
        list.emplace_back(*out.vertex_map[e.u.index()], *out.vertex_map[e.v.index()]);
    }
    out.graph = Multigraph(out.origin.size(), list, std::move(names));
    return out;
}

MSubdivision m_subdivide(const Multigraph& g, VertexId u, VertexId v) {
    auto between = g.edges_between(u, v);
    if (between.empty()) throw ArgumentError("m_subdivide: vertices are not adjacent");
    MSubdivision out;
    out.midpoint = VertexId(g.vertex_count());
    EdgeList list = endpoints_of(g);
    for (EdgeId e : between) {
        list[e.index()] = {u, out.midpoint};
        out.first_half.push_back(e);
    }
    for (std::size_t i = 0; i < between.size(); ++i) {
        out.second_half.push_back(EdgeId(list.size()));
        list.emplace_back(out.midpoint, v);
    }
    std::vector<std::string> names(g.names().begin(), g.names().end());
    names.push_back(unique_name(names, g.name(u) + "~" + g.name(v)));
    out.graph = Multigraph(g.vertex_count() + 1, list, std::move(names));
    return out;
}

std::vector<Chain> maximal_chains(const Multigraph& g) {
    std::vector<Chain> chains;
    // Multiedges already placed in a chain, keyed by their smallest edge id.
    std::vector<bool> used(g.edge_count(), false);
    auto heavy = [&](VertexId a, VertexId b) { return g.multiplicity(a, b) >= 2; };
    auto interior = [&](VertexId x) { return g.simple_degree(x) == 2; };
    auto other_neighbor = [&](VertexId x, VertexId from) {
        for (const Neighbor& n : g.neighbors(x))
            if (n.vertex != from) return n.vertex;
        return from;
    };

    for (VertexId a : g.vertices()) {
        for (const Neighbor& n : g.neighbors(a)) {
            if (n.edges.size() < 2 || used[n.edges.front().index()]) continue;
            // Walk backwards from `a` to the start of the chain.
            VertexId prev = n.vertex;
            VertexId cur = a;
            bool closed = false;
            while (interior(cur)) {
                VertexId next = other_neighbor(cur, prev);
                if (!heavy(cur, next)) break;
                prev = cur;
                cur = next;
                if (cur == a) {
                    closed = true;
                    break;
                }
            }
            std::vector<VertexId> seq;
            if (closed) {
                // Every vertex has simple degree 2 and every pair is heavy: cut at the smallest vertex.
                VertexId start = a;
                VertexId p = a, c = a;
                do {
                    start = std::min(start, c);
                    VertexId next = other_neighbor(c, p == c ? n.vertex : p);
                    p = c;
                    c = next;
                } while (c != a);
                auto nb = g.neighbors(start);
                VertexId first_step = std::min(nb[0].vertex, nb[1].vertex);
                seq.push_back(start);
                VertexId pv = start, cv = first_step;
                while (cv != start) {
                    seq.push_back(cv);
                    VertexId next = other_neighbor(cv, pv);
                    pv = cv;
                    cv = next;
                }
            } else {
                VertexId start = cur;
                VertexId toward = prev;
                seq.push_back(start);
                VertexId pv = start, cv = toward;
                seq.push_back(cv);
                while (interior(cv)) {
                    VertexId next = other_neighbor(cv, pv);
                    if (!heavy(cv, next)) break;
                    pv = cv;
                    cv = next;
                    seq.push_back(cv);
                }
            }
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) used[g.edges_between(seq[i], seq[i + 1]).front().index()] = true;
            if (closed) {
                // The closing pair is not part of the reported open chain.
                used[g.edges_between(seq.back(), seq.front()).front().index()] = true;
            }
            if (!closed && seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
            chains.push_back(Chain{std::move(seq)});
        }
    }
    std::sort(chains.begin(), chains.end(), [](const Chain& x, const Chain& y) {
        auto kx = std::min(x.front(), x.back()), ky = std::min(y.front(), y.back());
        if (kx != ky) return kx < ky;
        return x.vertices < y.vertices;
    });
    return chains;
}

Subgraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges) {
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    for (EdgeId e : sorted) g.check(e);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<bool> present(g.vertex_count(), false);
    for (EdgeId e : sorted) {
        present[g.edge(e).u.index()] = true;
        present[g.edge(e).v.index()] = true;
    }
    Subgraph out;
    std::vector<std::optional<VertexId>> local(g.vertex_count());
    std::vector<std::string> names;
    for (VertexId v : g.vertices()) {
        if (!present[v.index()]) continue;
        local[v.index()] = VertexId(out.host_vertex.size());
        out.host_vertex.push_back(v);
        names.push_back(g.name(v));
    }
    EdgeList list;
    for (EdgeId e : sorted) list.emplace_back(*local[g.edge(e).u.index()], *local[g.edge(e).v.index()]);
    out.host_edge = std::move(sorted);
    out.graph = Multigraph(out.host_vertex.size(), list, std::move(names));
    return out;
}

Subgraph remove_vertices(const Multigraph& g, std::span<const VertexId> removed) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (VertexId v : removed) {
        g.check(v);
        gone[v.index()] = true;
    }
    Subgraph out;
    std::vector<std::optional<VertexId>> local(g.vertex_count());
    std::vector<std::string> names;
    for (VertexId v : g.vertices()) {
        if (gone[v.index()]) continue;
        local[v.index()] = VertexId(out.host_vertex.size());
        out.host_vertex.push_back(v);
        names.push_back(g.name(v));
    }
    EdgeList list;
    for (const Edge& e : g.edges()) {
        if (gone[e.u.index()] || gone[e.v.index()]) continue;
        out.host_edge.push_back(e.id);
        list.emplace_back(*local[e.u.index()], *local[e.v.index()]);
    }
    out.graph = Multigraph(out.host_vertex.size(), list, std::move(names));
    return out;
}

Subgraph remove_edges(const Multigraph& g, std::span<const EdgeId> removed) {
    std::vector<bool> gone(g.edge_count(), false);
    for (EdgeId e : removed) {
        g.check(e);
        gone[e.index()] = true;
    }
    Subgraph out;
    out.host_vertex = g.vertices();
    EdgeList list;
    for (const Edge& e : g.edges()) {
        if (gone[e.id.index()]) continue;
        out.host_edge.push_back(e.id);
        list.emplace_back(e.u, e.v);
    }
    std::vector<std::string> names(g.names().begin(), g.names().end());
    out.graph = Multigraph(g.vertex_count(), list, std::move(names));
    return out;
}

namespace {

struct BlockSearch {
    std::vector<std::vector<std::pair<VertexId, VertexId>>> blocks;  // as U(G) pairs
    std::vector<bool> articulation;
};

BlockSearch run_block_search(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    BlockSearch out;
    out.articulation.assign(n, false);
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    struct Frame {
        VertexId v;
        VertexId parent;
        bool has_parent;
        std::size_t next;
        std::size_t children;
    };
    std::vector<std::pair<VertexId, VertexId>> edge_stack;
    for (VertexId root : g.vertices()) {
        if (disc[root.index()] != -1) continue;
        std::vector<Frame> stack{{root, root, false, 0, 0}};
        disc[root.index()] = low[root.index()] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto adj = g.neighbors(f.v);
            if (f.next < adj.size()) {
                VertexId w = adj[f.next++].vertex;
                if (f.has_parent && w == f.parent) continue;
                if (disc[w.index()] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w.index()] = low[w.index()] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v, true, 0, 0});
                } else if (disc[w.index()] < disc[f.v.index()]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v.index()] = std::min(low[f.v.index()], disc[w.index()]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (!done.has_parent) {
                if (done.children > 1) out.articulation[done.v.index()] = true;
                continue;
            }
            VertexId p = done.parent;
            low[p.index()] = std::min(low[p.index()], low[done.v.index()]);
            if (low[done.v.index()] >= disc[p.index()]) {
                if (stack.back().has_parent) out.articulation[p.index()] = true;
                std::vector<std::pair<VertexId, VertexId>> block;
                while (true) {
                    auto top = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(top);
                    if (top.first == p && top.second == done.v) break;
                }
                out.blocks.push_back(std::move(block));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Subgraph> biconnected_components(const Multigraph& g) {
    std::vector<Subgraph> out;
    for (const auto& block : run_block_search(g).blocks) {
        std::vector<EdgeId> edges;
        for (auto [a, b] : block)
            for (EdgeId e : g.edges_between(a, b)) edges.push_back(e);
        out.push_back(edge_subgraph(g, edges));
    }
    std::sort(out.begin(), out.end(),
              [](const Subgraph& x, const Subgraph& y) { return x.host_edge.front() < y.host_edge.front(); });
    return out;
}

std::vector<VertexId> articulation_points(const Multigraph& g) {
    auto marks = run_block_search(g).articulation;
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < marks.size(); ++i)
        if (marks[i]) out.push_back(VertexId(i));
    return out;
}

std::vector<bool> reachable_set(const Multigraph& g, VertexId from, const Blocked& blocked) {
    g.check(from);
    std::vector<bool> seen(g.vertex_count(), false);
    if (blocked.vertex(from)) return seen;
    std::deque<VertexId> queue{from};
    seen[from.index()] = true;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : g.incident_edges(x)) {
            if (blocked.edge(e)) continue;
            VertexId y = g.edge(e).other(x);
            if (seen[y.index()] || blocked.vertex(y)) continue;
            seen[y.index()] = true;
            queue.push_back(y);
        }
    }
    return seen;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> done(g.vertex_count(), false);
    for (VertexId v : g.vertices()) {
        if (done[v.index()]) continue;
        auto seen = reachable_set(g, v);
        std::vector<VertexId> comp;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) {
                comp.push_back(VertexId(i));
                done[i] = true;
            }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Multigraph& g) {
    if (g.vertex_count() == 0) return true;
    auto seen = reachable_set(g, VertexId(0u));
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::optional<std::vector<VertexId>> find_path(const Multigraph& g, std::span<const VertexId> sources,
                                               std::span<const VertexId> targets, const Blocked& blocked) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> is_target(n, false);
    for (VertexId t : targets) {
        g.check(t);
        if (!blocked.vertex(t)) is_target[t.index()] = true;
    }
    std::vector<std::optional<VertexId>> parent(n);
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue;
    std::vector<VertexId> ordered(sources.begin(), sources.end());
    std::sort(ordered.begin(), ordered.end());
    for (VertexId s : ordered) {
        g.check(s);
        if (blocked.vertex(s) || seen[s.index()]) continue;
        if (is_target[s.index()]) return std::vector<VertexId>{s};
        seen[s.index()] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.neighbors(x)) {
            VertexId y = nb.vertex;
            if (seen[y.index()] || blocked.vertex(y)) continue;
            bool usable = std::any_of(nb.edges.begin(), nb.edges.end(), [&](EdgeId e) { return !blocked.edge(e); });
            if (!usable) continue;
            seen[y.index()] = true;
            parent[y.index()] = x;
            if (is_target[y.index()]) {
                std::vector<VertexId> path{y};
                while (parent[path.back().index()]) path.push_back(*parent[path.back().index()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

}  // namespace mengerian
