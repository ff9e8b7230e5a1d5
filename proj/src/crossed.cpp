// F1/F2 assembly from cycles through a chain, and the case analysis after
// identifying a chain into a single vertex.

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <set>

#include "mengerian/errors.hpp"
#include "mengerian/patterns.hpp"

namespace mengerian {

namespace {

using Path = std::vector<VertexId>;
using VertexSet = std::set<VertexId>;

std::optional<std::string> chain_problem(const Multigraph& g, const Chain& chain, bool internal_degree) {
    if (chain.vertices.size() < 2) return "chain needs at least two vertices";
    VertexSet seen;
    for (VertexId v : chain.vertices) {
        if (!g.contains(v)) return "chain vertex outside the graph";
        if (!seen.insert(v).second) return "chain repeats a vertex";
    }
    for (std::size_t i = 0; i < chain.length(); ++i)
        if (g.multiplicity(chain.vertices[i], chain.vertices[i + 1]) < 2)
            return "chain hop " + g.name(chain.vertices[i]) + "-" + g.name(chain.vertices[i + 1]) +
                   " is not a multiedge";
    if (internal_degree)
        for (std::size_t i = 1; i < chain.length(); ++i)
            if (g.simple_degree(chain.vertices[i]) != 2)
                return "internal chain vertex " + g.name(chain.vertices[i]) + " has simple degree != 2";
    return std::nullopt;
}

std::vector<EdgeId> chain_edges(const Multigraph& g, const Chain& chain, std::size_t per_hop) {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < chain.length(); ++i) {
        auto hop = g.edges_between(chain.vertices[i], chain.vertices[i + 1]);
        out.insert(out.end(), hop.begin(), hop.begin() + static_cast<std::ptrdiff_t>(std::min(per_hop, hop.size())));
    }
    return out;
}

VertexSet vertices_of(const Multigraph& g, std::span<const EdgeId> edges) {
    VertexSet out;
    for (EdgeId e : edges) {
        g.check(e);
        out.insert(g.edge(e).u);
        out.insert(g.edge(e).v);
    }
    return out;
}

bool has_duplicates(std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) != edges.end();
}

bool is_cycle(const Multigraph& g, std::span<const EdgeId> edges) {
    if (edges.size() < 2 || has_duplicates({edges.begin(), edges.end()})) return false;
    Subgraph sub = edge_subgraph(g, edges);
    for (VertexId v : sub.graph.vertices())
        if (sub.graph.edge_degree(v) != 2) return false;
    return is_connected(sub.graph);
}

/// Ends of a simple path formed by `edges`, or nullopt.
std::optional<std::pair<VertexId, VertexId>> path_ends(const Multigraph& g, std::span<const EdgeId> edges) {
    if (edges.empty() || has_duplicates({edges.begin(), edges.end()})) return std::nullopt;
    Subgraph sub = edge_subgraph(g, edges);
    if (!is_connected(sub.graph) || sub.graph.edge_count() + 1 != sub.graph.vertex_count()) return std::nullopt;
    std::vector<VertexId> ends;
    for (VertexId v : sub.graph.vertices()) {
        std::size_t d = sub.graph.edge_degree(v);
        if (d > 2) return std::nullopt;
        if (d == 1) ends.push_back(sub.host_vertex[v.index()]);
    }
    return std::pair{ends[0], ends[1]};
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    return std::any_of(a.begin(), a.end(), [&](VertexId v) { return b.count(v) > 0; });
}

std::vector<EdgeId> concat(std::initializer_list<std::span<const EdgeId>> parts) {
    std::vector<EdgeId> out;
    for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

/// Checks J against the two cycles it must join and returns its ends.
std::pair<VertexId, VertexId> check_join(const Multigraph& g, std::span<const EdgeId> j, const VertexSet& a,
                                         const VertexSet& b, const VertexSet& chain) {
    auto ends = path_ends(g, j);
    if (!ends) throw AssemblyError("J is not a path");
    VertexSet vj = vertices_of(g, j);
    if (intersects(vj, chain)) throw AssemblyError("J meets the chain");
    auto [x, y] = *ends;
    if (a.count(y) && b.count(x)) std::swap(x, y);
    if (!a.count(x) || !b.count(y)) throw AssemblyError("J does not join the two cycles");
    for (VertexId v : vj)
        if (v != x && v != y && (a.count(v) || b.count(v))) throw AssemblyError("J meets a cycle internally");
    return {x, y};
}

}  // namespace

MEmbedding assemble_f1(const Multigraph& g, const Chain& chain, std::span<const EdgeId> c1,
                       std::span<const EdgeId> c2, std::span<const EdgeId> j) {
    if (auto problem = chain_problem(g, chain, false)) throw AssemblyError(*problem);
    if (!is_cycle(g, c1) || !is_cycle(g, c2)) throw AssemblyError("C1 and C2 must be cycles");
    if (has_duplicates(concat({c1, c2}))) throw AssemblyError("C1 and C2 share an edge");
    const VertexSet vl(chain.vertices.begin(), chain.vertices.end());
    const VertexSet v1 = vertices_of(g, c1), v2 = vertices_of(g, c2);
    VertexSet common;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::inserter(common, common.end()));
    if (common != vl) throw AssemblyError("C1 and C2 must meet exactly in the chain");
    auto [x, y] = check_join(g, j, v1, v2, vl);
    auto avoids = [&](VertexId z) { return !g.adjacent(z, x) && !g.adjacent(z, y); };
    if (!avoids(chain.front()) && !avoids(chain.back()))
        throw AssemblyError("both chain ends are adjacent to an end of J");
    std::vector<EdgeId> edges = concat({c1, c2, j});
    auto emb = certify_subgraph(g, edges, pattern(PatternId::F1));
    if (!emb) throw AssemblyError("union is not an m-subdivision of F1");
    return *emb;
}

MEmbedding assemble_f2(const Multigraph& g, const Chain& chain, std::span<const EdgeId> c0,
                       std::span<const EdgeId> cq, std::span<const EdgeId> j) {
    if (auto problem = chain_problem(g, chain, false)) throw AssemblyError(*problem);
    if (!is_cycle(g, c0) || !is_cycle(g, cq)) throw AssemblyError("C0 and Cq must be cycles");
    const VertexSet vl(chain.vertices.begin(), chain.vertices.end());
    const VertexSet v0 = vertices_of(g, c0), vq = vertices_of(g, cq);
    if (intersects(v0, vq)) throw AssemblyError("C0 and Cq share a vertex");
    auto meets_only = [&](const VertexSet& c, VertexId z) {
        return c.count(z) && std::count_if(vl.begin(), vl.end(), [&](VertexId v) { return c.count(v) > 0; }) == 1;
    };
    if (!meets_only(v0, chain.front())) throw AssemblyError("C0 must meet the chain exactly at its first vertex");
    if (!meets_only(vq, chain.back())) throw AssemblyError("Cq must meet the chain exactly at its last vertex");
    check_join(g, j, v0, vq, vl);
    std::vector<EdgeId> l = chain_edges(g, chain, 2);
    std::vector<EdgeId> edges = concat({c0, cq, j, l});
    if (has_duplicates(edges)) throw AssemblyError("cycles reuse a chain edge");
    auto emb = certify_subgraph(g, edges, pattern(PatternId::F2));
    if (!emb) throw AssemblyError("union is not an m-subdivision of F2");
    return *emb;
}

std::string_view to_string(CrossedStructure::Kind kind) {
    return kind == CrossedStructure::Kind::OneCrossed ? "1-crossed" : "2-crossed";
}

bool parts_are_attached_only_at_ends(const Multigraph& g, const CrossedStructure& cs) {
    std::vector<const CrossedPart*> parts{&cs.a1, &cs.a2, &cs.b2};
    if (cs.b1) parts.push_back(&*cs.b1);
    for (const CrossedPart* part : parts) {
        const VertexSet inside(part->vertices.begin(), part->vertices.end());
        for (VertexId v : inside)
            for (const Neighbor& nb : g.neighbors(v))
                if (!inside.count(nb.vertex) && nb.vertex != part->first && nb.vertex != part->second) return false;
    }
    return true;
}

CrossedStructure lift_to_host(const CrossedStructure& cs, const Subgraph& sub) {
    auto up = [&](VertexId v) { return sub.host_vertex[v.index()]; };
    auto lift_part = [&](const CrossedPart& p) {
        CrossedPart out{up(p.first), up(p.second), {}};
        for (VertexId v : p.vertices) out.vertices.push_back(up(v));
        std::sort(out.vertices.begin(), out.vertices.end());
        return out;
    };
    CrossedStructure out = cs;
    for (auto& v : out.h) v = up(v);
    for (auto& v : out.chain.vertices) v = up(v);
    out.a1 = lift_part(cs.a1);
    out.a2 = lift_part(cs.a2);
    out.b2 = lift_part(cs.b2);
    if (cs.b1) out.b1 = lift_part(*cs.b1);
    return out;
}

namespace {

// Gem vertex order: rim s, u, v, t and apex w.
constexpr std::array<int, 4> kRim{0, 1, 2, 4};
constexpr int kApex = 3;

/// The gem found after identification, carried back to the original graph.
struct LiftedGem {
    std::array<VertexId, 4> h;
    std::array<Path, 4> spoke;  // h_i .. u_i, the identified vertex dropped
    std::array<std::vector<EdgeId>, 4> spoke_edges;
    std::array<Path, 3> rim;  // h1..h2, h2..h3, h3..h4
    std::vector<EdgeId> rim_edges;
};

std::pair<Path, std::vector<EdgeId>> oriented_segment(const MEmbedding& emb, int a, int b) {
    for (const Segment& seg : emb.segments) {
        const int pu = static_cast<int>(seg.pattern_u.index()), pv = static_cast<int>(seg.pattern_v.index());
        if (!((pu == a && pv == b) || (pu == b && pv == a))) continue;
        Path path = seg.path;
        std::vector<EdgeId> edges;
        for (const auto& hop : seg.hops) edges.push_back(hop.front());
        if (pu != a) {
            std::reverse(path.begin(), path.end());
            std::reverse(edges.begin(), edges.end());
        }
        return {path, edges};
    }
    throw ContractError("gem embedding lacks a segment");
}

LiftedGem lift_gem(const MEmbedding& gem, const Subgraph& simple, const Identification& ident) {
    std::vector<EdgeId> back(ident.graph.edge_count());
    for (std::size_t e = 0; e < ident.edge_map.size(); ++e)
        if (ident.edge_map[e]) back[ident.edge_map[e]->index()] = EdgeId(e);
    auto vertex = [&](VertexId x) { return ident.origin[simple.host_vertex[x.index()].index()]; };
    auto edge = [&](EdgeId e) { return back[simple.host_edge[e.index()].index()]; };

    LiftedGem out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.h[i] = vertex(gem.branch_map[static_cast<std::size_t>(kRim[i])]);
        auto [path, edges] = oriented_segment(gem, kRim[i], kApex);
        path.pop_back();
        edges.pop_back();
        for (VertexId x : path) out.spoke[i].push_back(vertex(x));
        for (EdgeId e : edges) out.spoke_edges[i].push_back(edge(e));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        auto [path, edges] = oriented_segment(gem, kRim[i], kRim[i + 1]);
        for (VertexId x : path) out.rim[i].push_back(vertex(x));
        for (EdgeId e : edges) out.rim_edges.push_back(edge(e));
    }
    return out;
}

std::optional<MEmbedding> search_f1_f2(const Multigraph& g, std::span<const EdgeId> edges) {
    Subgraph sub = edge_subgraph(g, edges);
    for (PatternId id : {PatternId::F1, PatternId::F2})
        if (auto emb = find_m_topological_minor(sub.graph, pattern(id))) return lift_to_host(*emb, sub);
    return std::nullopt;
}

/// Edges of a path found in G avoiding the blocked edges, smallest id per hop.
std::vector<EdgeId> path_edges(const Multigraph& g, const Path& path, const Blocked& blocked) {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        for (EdgeId e : g.edges_between(path[i], path[i + 1]))
            if (!blocked.edge(e)) {
                out.push_back(e);
                break;
            }
    return out;
}

class ChainCase {
public:
    ChainCase(const Multigraph& g, Chain chain, const LiftedGem& gem, unsigned sides)
        : g_(g), chain_(std::move(chain)), gem_(gem), sides_(sides) {}

    ChainOutcome resolve();

private:
    VertexId side_vertex(std::size_t i) const { return (sides_ >> i) & 1U ? chain_.back() : chain_.front(); }
    std::vector<EdgeId> h_star() const;
    std::optional<std::vector<EdgeId>> bridge(const VertexSet& from, const VertexSet& to) const;
    CrossedStructure structure(const VertexSet& a1, const VertexSet& a2, const VertexSet& b) const;

    const Multigraph& g_;
    Chain chain_;
    const LiftedGem& gem_;
    unsigned sides_;  // bit i set: u_{i+1} attaches to the last chain vertex
    std::vector<EdgeId> h_star_edges_;
    VertexSet h_star_vertices_;
};

std::vector<EdgeId> ChainCase::h_star() const {
    std::vector<EdgeId> edges = gem_.rim_edges;
    for (std::size_t i = 0; i < 4; ++i) {
        edges.insert(edges.end(), gem_.spoke_edges[i].begin(), gem_.spoke_edges[i].end());
        edges.push_back(g_.edges_between(gem_.spoke[i].back(), side_vertex(i)).front());
    }
    std::vector<EdgeId> l = chain_edges(g_, chain_, 2);
    edges.insert(edges.end(), l.begin(), l.end());
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::optional<std::vector<EdgeId>> ChainCase::bridge(const VertexSet& from, const VertexSet& to) const {
    Blocked blocked;
    blocked.vertices.assign(g_.vertex_count(), false);
    blocked.edges.assign(g_.edge_count(), false);
    for (VertexId v : h_star_vertices_)
        if (!from.count(v) && !to.count(v)) blocked.vertices[v.index()] = true;
    for (EdgeId e : h_star_edges_) blocked.edges[e.index()] = true;
    std::vector<VertexId> sources(from.begin(), from.end()), targets(to.begin(), to.end());
    auto path = find_path(g_, sources, targets, blocked);
    if (!path) return std::nullopt;
    return path_edges(g_, *path, blocked);
}

ChainOutcome ChainCase::resolve() {
    h_star_edges_ = h_star();
    h_star_vertices_ = vertices_of(g_, h_star_edges_);
    if (auto emb = search_f1_f2(g_, h_star_edges_)) return *emb;

    // Only the crossed arrangement is left: u1, u3 on one chain end, u2 = h2
    // and u3 = h3. Orient the chain so that u1, u3 sit at its front.
    if (sides_ == 0b0101U) {
        chain_ = chain_.reversed();
        sides_ = 0b1010U;
    }
    if (sides_ != 0b1010U) throw ContractError("rim vertices attach in a non-crossed way but H* holds no F1/F2");
    if (gem_.spoke[1].size() != 1 || gem_.spoke[2].size() != 1)
        throw ContractError("indirect middle spoke but H* holds no F1/F2");

    VertexSet a1(gem_.rim[0].begin(), gem_.rim[0].end() - 1);
    a1.insert(gem_.spoke[0].begin(), gem_.spoke[0].end());
    VertexSet a2(gem_.rim[2].begin() + 1, gem_.rim[2].end());
    a2.insert(gem_.spoke[3].begin(), gem_.spoke[3].end());
    VertexSet b(gem_.rim[1].begin() + 1, gem_.rim[1].end() - 1);
    const VertexId u1 = gem_.spoke[0].back(), u4 = gem_.spoke[3].back();

    VertexSet a12 = a1;
    a12.insert(a2.begin(), a2.end());
    VertexSet a1_inner = a1, a2_inner = a2;
    a1_inner.erase(u1);
    a2_inner.erase(u4);
    for (auto [from, to] : {std::pair{&b, &a12}, std::pair{&a1_inner, &a2}, std::pair{&a1, &a2_inner}}) {
        auto extra = bridge(*from, *to);
        if (!extra) continue;
        std::vector<EdgeId> edges = h_star_edges_;
        edges.insert(edges.end(), extra->begin(), extra->end());
        if (auto emb = search_f1_f2(g_, edges)) return *emb;
        throw ContractError("path outside H* did not complete an F1/F2");
    }
    return structure(a1, a2, b);
}

CrossedStructure ChainCase::structure(const VertexSet& a1, const VertexSet& a2, const VertexSet& b) const {
    const VertexId u1 = gem_.spoke[0].back(), h2 = gem_.h[1], h3 = gem_.h[2], u4 = gem_.spoke[3].back();
    CrossedStructure cs;
    cs.h = {u1, h2, h3, u4};
    cs.chain = chain_;

    std::array<VertexSet, 4> parts;  // a1, a2, b2, b1 interiors
    parts[0] = a1;
    parts[0].erase(u1);
    parts[1] = a2;
    parts[1].erase(u4);
    parts[2] = b;
    const std::array<std::pair<VertexId, VertexId>, 4> ends{{{u1, h2}, {h3, u4}, {h2, h3}, {u1, u4}}};

    std::vector<VertexId> removed(chain_.vertices);
    removed.insert(removed.end(), cs.h.begin(), cs.h.end());
    const VertexSet removed_set(removed.begin(), removed.end());
    Subgraph rest = remove_vertices(g_, removed);
    bool complete = true;
    for (const auto& component : connected_components(rest.graph)) {
        VertexSet members, attachments;
        for (VertexId x : component) members.insert(rest.host_vertex[x.index()]);
        for (VertexId v : members)
            for (const Neighbor& nb : g_.neighbors(v))
                if (removed_set.count(nb.vertex)) attachments.insert(nb.vertex);
        std::vector<std::size_t> touching;
        for (std::size_t p = 0; p < 3; ++p)
            if (intersects(members, parts[p])) touching.push_back(p);
        if (touching.empty())
            for (std::size_t p = 0; p < 4; ++p)
                if (std::all_of(attachments.begin(), attachments.end(),
                                [&](VertexId a) { return a == ends[p].first || a == ends[p].second; })) {
                    touching.push_back(p);
                    break;
                }
        if (touching.size() != 1) {
            complete = false;
            continue;
        }
        parts[touching[0]].insert(members.begin(), members.end());
    }

    auto make = [&](std::size_t p) { return CrossedPart{ends[p].first, ends[p].second, {parts[p].begin(), parts[p].end()}}; };
    cs.a1 = make(0);
    cs.a2 = make(1);
    cs.b2 = make(2);
    if (!parts[3].empty() || g_.adjacent(u1, u4)) cs.b1 = make(3);
    cs.kind = cs.b1 ? CrossedStructure::Kind::TwoCrossed : CrossedStructure::Kind::OneCrossed;
    cs.exact = complete && parts_are_attached_only_at_ends(g_, cs);
    return cs;
}

std::optional<ChainOutcome> resolve_chain(const Multigraph& g, const Chain& chain) {
    if (auto problem = chain_problem(g, chain, true)) throw ContractError(*problem);
    Identification ident = identify(g, chain.vertices);
    Subgraph simple = underlying_simple(ident.graph);
    auto gem = find_f3_with_apex(simple.graph, ident.merged);
    if (!gem) return std::nullopt;
    const LiftedGem lifted = lift_gem(*gem, simple, ident);

    std::optional<CrossedStructure> crossed;
    bool split_found = false;
    for (unsigned sides = 0; sides < 16; ++sides) {
        if (std::popcount(sides) != 2) continue;
        bool fits = true;
        for (std::size_t i = 0; i < 4; ++i) {
            VertexId z = (sides >> i) & 1U ? chain.back() : chain.front();
            if (!g.adjacent(lifted.spoke[i].back(), z)) fits = false;
        }
        if (!fits) continue;
        split_found = true;
        ChainOutcome outcome = ChainCase(g, chain, lifted, sides).resolve();
        if (std::holds_alternative<MEmbedding>(outcome)) return outcome;
        if (!crossed) crossed = std::get<CrossedStructure>(outcome);
    }
    if (!split_found) throw ContractError("gem spokes do not split two and two over the chain ends");
    return ChainOutcome{*crossed};
}

}  // namespace

std::optional<ChainOutcome> examine_chain(const Multigraph& g, const Chain& chain) { return resolve_chain(g, chain); }

ChainOutcome helpcrossed(const Multigraph& g, const Chain& chain) {
    if (g.vertex_count() < 3 || !is_connected(g) || !articulation_points(g).empty())
        throw ContractError("helpcrossed needs a 2-connected graph");
    if (find_f3_subdivision(underlying_simple(g).graph)) throw ContractError("U(g) already has a gem subdivision");
    auto outcome = resolve_chain(g, chain);
    if (!outcome) throw ContractError("identifying the chain creates no gem subdivision");
    return *outcome;
}

}  // namespace mengerian
