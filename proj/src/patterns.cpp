#include "mengerian/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "mengerian/errors.hpp"
#include "pattern_threads.hpp"

namespace mengerian {

std::string_view to_string(PatternId id) {
    switch (id) {
        case PatternId::F1: return "F1";
        case PatternId::F2: return "F2";
        case PatternId::F3: return "F3";
    }
    return "?";
}

std::optional<PatternId> parse_pattern_id(std::string_view text) {
    for (PatternId id : kAllPatterns)
        if (to_string(id) == text) return id;
    return std::nullopt;
}

namespace {

// Edges are listed in label order, so edge i carries label i + 1 unless
// `labels` says otherwise.
Pattern make_pattern(PatternId id, std::vector<std::string> names, std::initializer_list<std::pair<int, int>> edges,
                     std::vector<Label> labels) {
    const std::size_t n = names.size();
    Multigraph g = Multigraph::from_pairs(n, edges, names);
    VertexId s = *g.find("s");
    VertexId t = *g.find("t");
    return Pattern{id, std::move(g), s, t, TimeFunction(std::move(labels))};
}

std::vector<Pattern> build_patterns() {
    std::vector<Pattern> out;
    // s, u, v, w, w', t; the doubled pair is w-w'.
    out.push_back(make_pattern(PatternId::F1, {"s", "u", "v", "w", "w'", "t"},
                               {{0, 1}, {1, 4}, {4, 3}, {3, 5}, {0, 3}, {3, 4}, {1, 2}, {4, 2}, {2, 5}},
                               {1, 2, 3, 4, 5, 6, 7, 8, 9}));
    out.push_back(make_pattern(PatternId::F2, {"s", "u", "v", "w", "w'", "t"},
                               {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {0, 3}, {3, 4}, {1, 2}, {4, 2}, {2, 5}},
                               {1, 2, 3, 4, 5, 6, 7, 8, 9}));
    // Path s-u-v-t with apex w: F1 with w and w' identified.
    out.push_back(make_pattern(PatternId::F3, {"s", "u", "v", "w", "t"},
                               {{0, 1}, {1, 3}, {3, 4}, {0, 3}, {1, 2}, {3, 2}, {2, 4}}, {1, 2, 4, 5, 7, 8, 9}));
    return out;
}

}  // namespace

const Pattern& pattern(PatternId id) {
    static const std::vector<Pattern> patterns = build_patterns();
    return patterns[static_cast<std::size_t>(id)];
}

std::vector<EdgeId> MEmbedding::edges() const {
    std::vector<EdgeId> out;
    for (const Segment& seg : segments)
        for (const auto& hop : seg.hops) out.insert(out.end(), hop.begin(), hop.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> MEmbedding::vertices() const {
    std::vector<VertexId> out(branch_map.begin(), branch_map.end());
    for (const Segment& seg : segments) out.insert(out.end(), seg.path.begin(), seg.path.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexId MEmbedding::source() const { return branch_map[mengerian::pattern(this->pattern).s.index()]; }
VertexId MEmbedding::target() const { return branch_map[mengerian::pattern(this->pattern).t.index()]; }

std::optional<std::string> embedding_error(const Multigraph& host, const MEmbedding& emb) {
    const Pattern& f = pattern(emb.pattern);
    const Multigraph& p = f.graph;
    if (emb.branch_map.size() != p.vertex_count()) return "branch map has the wrong size";
    std::vector<int> owner(host.vertex_count(), -1);  // -2 branch image, k segment k interior
    for (VertexId v : emb.branch_map) {
        if (!host.contains(v)) return "branch image outside the host";
        if (owner[v.index()] != -1) return "branch map is not injective";
        owner[v.index()] = -2;
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a : p.vertices())
        for (const Neighbor& nb : p.neighbors(a))
            if (a < nb.vertex) pairs.emplace_back(a, nb.vertex);
    if (emb.segments.size() != pairs.size()) return "segment count does not match the pattern";
    std::vector<bool> edge_used(host.edge_count(), false);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const Segment& seg = emb.segments[k];
        const std::string where = "segment " + p.name(pairs[k].first) + "-" + p.name(pairs[k].second);
        if (seg.pattern_u != pairs[k].first || seg.pattern_v != pairs[k].second) return where + " is out of order";
        if (seg.path.size() < 2) return where + " is too short";
        if (seg.path.front() != emb.branch_map[seg.pattern_u.index()] ||
            seg.path.back() != emb.branch_map[seg.pattern_v.index()])
            return where + " does not join the branch images";
        if (seg.hops.size() + 1 != seg.path.size()) return where + " has a hop count mismatch";
        const std::size_t mu = p.multiplicity(seg.pattern_u, seg.pattern_v);
        for (std::size_t i = 1; i + 1 < seg.path.size(); ++i) {
            VertexId x = seg.path[i];
            if (!host.contains(x)) return where + " leaves the host";
            if (owner[x.index()] != -1) return where + " is not internally disjoint";
            owner[x.index()] = static_cast<int>(k);
        }
        for (std::size_t i = 0; i < seg.hops.size(); ++i) {
            if (seg.hops[i].size() != mu) return where + " has the wrong multiplicity";
            for (EdgeId e : seg.hops[i]) {
                if (!host.contains(e)) return where + " uses an unknown edge";
                if (edge_used[e.index()]) return where + " reuses an edge";
                edge_used[e.index()] = true;
                if (!host.edge(e).joins(seg.path[i], seg.path[i + 1])) return where + " uses a non-incident edge";
            }
        }
    }
    return std::nullopt;
}

MEmbedding lift_to_host(const MEmbedding& emb, const Subgraph& sub) {
    MEmbedding out{emb.pattern, {}, {}};
    for (VertexId v : emb.branch_map) out.branch_map.push_back(sub.host_vertex[v.index()]);
    for (const Segment& seg : emb.segments) {
        Segment s{seg.pattern_u, seg.pattern_v, {}, {}};
        for (VertexId v : seg.path) s.path.push_back(sub.host_vertex[v.index()]);
        for (const auto& hop : seg.hops) {
            std::vector<EdgeId> h;
            for (EdgeId e : hop) h.push_back(sub.host_edge[e.index()]);
            std::sort(h.begin(), h.end());
            s.hops.push_back(std::move(h));
        }
        out.segments.push_back(std::move(s));
    }
    return out;
}

namespace detail {

std::vector<Thread> threads_of(const Multigraph& g) {
    std::vector<Thread> out;
    for (VertexId r : g.vertices()) {
        if (g.simple_degree(r) == 2) continue;
        for (const Neighbor& first : g.neighbors(r)) {
            Thread th;
            th.path = {r, first.vertex};
            th.multiplicity = {first.edges.size()};
            while (g.simple_degree(th.path.back()) == 2) {
                VertexId cur = th.path.back(), prev = th.path[th.path.size() - 2];
                auto nb = g.neighbors(cur);
                const Neighbor& next = nb[0].vertex == prev ? nb[1] : nb[0];
                th.path.push_back(next.vertex);
                th.multiplicity.push_back(next.edges.size());
            }
            VertexId end = th.path.back();
            if (end == r) {
                // Loop thread, seen from both sides: keep the copy starting at the smaller first edge.
                EdgeId head = g.edges_between(th.path[0], th.path[1]).front();
                EdgeId tail = g.edges_between(th.path[th.path.size() - 2], th.path.back()).front();
                if (head < tail) out.push_back(std::move(th));
            } else if (r < end) {
                out.push_back(std::move(th));
            }
        }
    }
    return out;
}

Thread Thread::reversed() const {
    return Thread{std::vector<VertexId>(path.rbegin(), path.rend()),
                  std::vector<std::size_t>(multiplicity.rbegin(), multiplicity.rend())};
}

std::optional<std::vector<std::size_t>> split_thread(std::span<const std::size_t> host_mult,
                                                     std::span<const std::size_t> pattern_mult, bool exact) {
    const std::size_t n = host_mult.size(), k = pattern_mult.size();
    if (k == 0 || n < k) return std::nullopt;
    auto fits = [&](std::size_t hop, std::size_t block) {
        return exact ? host_mult[hop] == pattern_mult[block] : host_mult[hop] >= pattern_mult[block];
    };
    // ok[j][i]: hops i.. can be split into blocks j..
    std::vector<std::vector<char>> ok(k + 1, std::vector<char>(n + 1, 0));
    ok[k][n] = 1;
    for (std::size_t j = k; j-- > 0;) {
        for (std::size_t i = n; i-- > 0;) {
            // block j covers hops i..e-1
            for (std::size_t e = i + 1; e <= n; ++e) {
                if (!fits(e - 1, j)) break;
                if (ok[j + 1][e]) {
                    ok[j][i] = 1;
                    break;
                }
            }
        }
    }
    if (!ok[0][0]) return std::nullopt;
    std::vector<std::size_t> bounds{0};
    std::size_t i = 0;
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t e = i + 1;
        while (!ok[j + 1][e]) ++e;
        bounds.push_back(e);
        i = e;
    }
    return bounds;
}

}  // namespace detail

using detail::Thread;

namespace {

/// Smallest-id `count` edges between a and b.
std::vector<EdgeId> pick_edges(const Multigraph& g, VertexId a, VertexId b, std::size_t count) {
    auto all = g.edges_between(a, b);
    return std::vector<EdgeId>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
}

/// Turns a matched pattern thread into segments. `host_path` runs from the
/// image of pattern.path.front() to the image of pattern.path.back().
void place_thread(const Multigraph& host, const Multigraph& p, const Thread& pt, std::span<const VertexId> host_path,
                  std::span<const std::size_t> bounds, MEmbedding& emb) {
    for (std::size_t j = 0; j + 1 < pt.path.size(); ++j) {
        VertexId a = pt.path[j], b = pt.path[j + 1];
        emb.branch_map[a.index()] = host_path[bounds[j]];
        emb.branch_map[b.index()] = host_path[bounds[j + 1]];
        Segment seg{a, b, {}, {}};
        for (std::size_t i = bounds[j]; i <= bounds[j + 1]; ++i) seg.path.push_back(host_path[i]);
        const std::size_t mu = p.multiplicity(a, b);
        for (std::size_t i = bounds[j]; i < bounds[j + 1]; ++i)
            seg.hops.push_back(pick_edges(host, host_path[i], host_path[i + 1], mu));
        if (b < a) {
            std::swap(seg.pattern_u, seg.pattern_v);
            std::reverse(seg.path.begin(), seg.path.end());
            std::reverse(seg.hops.begin(), seg.hops.end());
        }
        emb.segments.push_back(std::move(seg));
    }
}

void sort_segments(MEmbedding& emb) {
    std::sort(emb.segments.begin(), emb.segments.end(), [](const Segment& x, const Segment& y) {
        return std::pair{x.pattern_u, x.pattern_v} < std::pair{y.pattern_u, y.pattern_v};
    });
}

std::vector<VertexId> rigid_vertices(const Multigraph& g) {
    std::vector<VertexId> out;
    for (VertexId v : g.vertices())
        if (g.simple_degree(v) != 2) out.push_back(v);
    return out;
}

}  // namespace

std::optional<MEmbedding> is_m_subdivision(const Multigraph& h, const Pattern& f) {
    const Multigraph& p = f.graph;
    auto p_rigid = rigid_vertices(p), h_rigid = rigid_vertices(h);
    if (p_rigid.size() != h_rigid.size()) return std::nullopt;
    auto p_threads = detail::threads_of(p), h_threads = detail::threads_of(h);
    if (p_threads.size() != h_threads.size()) return std::nullopt;
    std::size_t covered = 0;
    for (const Thread& th : h_threads)
        for (std::size_t i = 0; i + 1 < th.path.size(); ++i) covered += th.multiplicity[i];
    if (covered != h.edge_count()) return std::nullopt;

    std::vector<std::size_t> perm(h_rigid.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool degrees_match = true;
        for (std::size_t i = 0; i < p_rigid.size() && degrees_match; ++i)
            degrees_match = p.simple_degree(p_rigid[i]) == h.simple_degree(h_rigid[perm[i]]);
        if (!degrees_match) continue;
        std::vector<std::optional<VertexId>> image(p.vertex_count());
        for (std::size_t i = 0; i < p_rigid.size(); ++i) image[p_rigid[i].index()] = h_rigid[perm[i]];

        // Match pattern threads to host threads with the same end images.
        std::vector<bool> used(h_threads.size(), false);
        std::vector<std::pair<Thread, std::vector<std::size_t>>> chosen(p_threads.size());
        std::function<bool(std::size_t)> match = [&](std::size_t k) -> bool {
            if (k == p_threads.size()) return true;
            const Thread& pt = p_threads[k];
            VertexId from = *image[pt.path.front().index()], to = *image[pt.path.back().index()];
            for (std::size_t j = 0; j < h_threads.size(); ++j) {
                if (used[j]) continue;
                Thread ht = h_threads[j];
                if (ht.path.front() == to && ht.path.back() == from) ht = ht.reversed();
                else if (!(ht.path.front() == from && ht.path.back() == to)) continue;
                auto bounds = detail::split_thread(ht.multiplicity, pt.multiplicity, true);
                if (!bounds) continue;
                used[j] = true;
                chosen[k] = {ht, *bounds};
                if (match(k + 1)) return true;
                used[j] = false;
            }
            return false;
        };
        if (!match(0)) continue;
        MEmbedding emb{f.id, std::vector<VertexId>(p.vertex_count()), {}};
        for (std::size_t k = 0; k < p_threads.size(); ++k)
            place_thread(h, p, p_threads[k], chosen[k].first.path, chosen[k].second, emb);
        sort_segments(emb);
        if (!embedding_error(h, emb)) return emb;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<MEmbedding> certify_subgraph(const Multigraph& host, std::span<const EdgeId> edges, const Pattern& f) {
    Subgraph sub = edge_subgraph(host, edges);
    auto emb = is_m_subdivision(sub.graph, f);
    if (!emb) return std::nullopt;
    return lift_to_host(*emb, sub);
}

namespace {

struct MinorSearch {
    const Multigraph& host;
    const Pattern& f;
    std::vector<VertexId> p_rigid;
    std::vector<Thread> p_threads;
    std::vector<std::optional<VertexId>> image;
    std::vector<bool> taken;  // host vertices used as branch images or segment interiors
    std::vector<std::pair<std::vector<VertexId>, std::vector<std::size_t>>> routes;

    std::optional<MEmbedding> run() {
        const Multigraph& p = f.graph;
        p_rigid = rigid_vertices(p);
        std::stable_sort(p_rigid.begin(), p_rigid.end(),
                         [&](VertexId a, VertexId b) { return p.simple_degree(a) > p.simple_degree(b); });
        p_threads = detail::threads_of(p);
        // Heavier and shorter threads first: they constrain the search most.
        std::stable_sort(p_threads.begin(), p_threads.end(), [](const Thread& a, const Thread& b) {
            auto key = [](const Thread& t) {
                return std::pair{-static_cast<long>(*std::max_element(t.multiplicity.begin(), t.multiplicity.end())),
                                 t.path.size()};
            };
            return key(a) < key(b);
        });
        image.assign(p.vertex_count(), std::nullopt);
        taken.assign(host.vertex_count(), false);
        routes.resize(p_threads.size());
        if (!assign(0)) return std::nullopt;
        MEmbedding emb{f.id, std::vector<VertexId>(p.vertex_count()), {}};
        for (std::size_t k = 0; k < p_threads.size(); ++k)
            place_thread(host, p, p_threads[k], routes[k].first, routes[k].second, emb);
        sort_segments(emb);
        if (embedding_error(host, emb)) throw ContractError("minor search produced an invalid embedding");
        return emb;
    }

    std::size_t heavy_degree(const Multigraph& g, VertexId v, std::size_t mu) const {
        std::size_t d = 0;
        for (const Neighbor& nb : g.neighbors(v))
            if (nb.edges.size() >= mu) ++d;
        return d;
    }

    bool assign(std::size_t i) {
        if (i == p_rigid.size()) return route(0);
        VertexId pv = p_rigid[i];
        const std::size_t need = f.graph.simple_degree(pv);
        std::size_t need_heavy = 0;
        for (const Neighbor& nb : f.graph.neighbors(pv))
            if (nb.edges.size() >= 2) ++need_heavy;
        for (VertexId hv : host.vertices()) {
            if (taken[hv.index()] || host.simple_degree(hv) < need) continue;
            if (need_heavy && heavy_degree(host, hv, 2) < need_heavy) continue;
            taken[hv.index()] = true;
            image[pv.index()] = hv;
            if (assign(i + 1)) return true;
            taken[hv.index()] = false;
            image[pv.index()] = std::nullopt;
        }
        return false;
    }

    bool route(std::size_t k) {
        if (k == p_threads.size()) return true;
        const Thread& pt = p_threads[k];
        VertexId from = *image[pt.path.front().index()], to = *image[pt.path.back().index()];
        std::vector<VertexId> path{from};
        std::vector<std::size_t> mult;
        return extend(k, to, path, mult);
    }

    bool extend(std::size_t k, VertexId to, std::vector<VertexId>& path, std::vector<std::size_t>& mult) {
        const Thread& pt = p_threads[k];
        const std::size_t min_mu = *std::min_element(pt.multiplicity.begin(), pt.multiplicity.end());
        for (const Neighbor& nb : host.neighbors(path.back())) {
            if (nb.edges.size() < min_mu) continue;
            VertexId y = nb.vertex;
            if (y == to) {
                path.push_back(y);
                mult.push_back(nb.edges.size());
                if (auto bounds = detail::split_thread(mult, pt.multiplicity, false)) {
                    routes[k] = {path, *bounds};
                    if (route(k + 1)) return true;
                }
                path.pop_back();
                mult.pop_back();
                continue;
            }
            if (taken[y.index()]) continue;
            taken[y.index()] = true;
            path.push_back(y);
            mult.push_back(nb.edges.size());
            if (extend(k, to, path, mult)) return true;
            path.pop_back();
            mult.pop_back();
            taken[y.index()] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<MEmbedding> find_m_topological_minor(const Multigraph& host, const Pattern& f) {
    MinorSearch search{host, f, {}, {}, {}, {}, {}};
    return search.run();
}

}  // namespace mengerian
