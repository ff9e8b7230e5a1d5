#include "mengerian/menger.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include "detail/max_flow.hpp"
#include "detail/temporal_index.hpp"
#include "mengerian/errors.hpp"

namespace mengerian {

using detail::bit;
using detail::Mask;
using detail::TemporalIndex;

namespace {

void check_guard(const Multigraph& g, const OracleLimits& limits) {
    if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64)
        throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices; the exact oracles are limited to " + std::to_string(limits.max_vertices));
}

void check_pair(const Multigraph& g, VertexId s, VertexId t) {
    g.check(s);
    g.check(t);
    if (s == t) throw ArgumentError("source and target must differ");
}

struct PathSearch {
    const TemporalIndex& index;
    VertexId s;
    VertexId t;
    std::map<Mask, TemporalPath> found;  // internal vertex set -> one realising path
    std::unordered_map<Mask, std::vector<Label>> best_time;  // visited set -> earliest time per vertex
    std::vector<VertexId> stack_vertices;
    std::vector<EdgeId> stack_edges;

    void run() {
        stack_vertices = {s};
        explore(s, 0, bit(s));
    }

    void explore(VertexId v, Label time, Mask visited) {
        auto& slot = best_time[visited];
        if (slot.empty()) slot.assign(index.vertex_count(), std::numeric_limits<Label>::max());
        if (slot[v.index()] <= time) return;
        slot[v.index()] = time;
        for (const auto& hop : index.hops(v)) {
            if (visited & bit(hop.to)) continue;
            if (v == s && hop.to == t) continue;  // direct edges are counted separately
            auto it = std::lower_bound(hop.edges.begin(), hop.edges.end(), std::pair<Label, EdgeId>{time, EdgeId(0u)});
            if (it == hop.edges.end()) continue;
            stack_vertices.push_back(hop.to);
            stack_edges.push_back(it->second);
            if (hop.to == t) {
                Mask internal = visited & ~bit(s);
                if (!found.contains(internal)) found.emplace(internal, TemporalPath{stack_vertices, stack_edges});
            } else {
                explore(hop.to, it->first, visited | bit(hop.to));
            }
            stack_vertices.pop_back();
            stack_edges.pop_back();
        }
    }
};

struct Packer {
    std::vector<Mask> masks;
    Mask s_side = 0;  // neighbours of s: each path uses a distinct one
    std::size_t limit = 0;
    std::size_t best = 0;
    std::vector<std::size_t> chosen, best_choice;

    void run(std::size_t i, Mask used) {
        if (chosen.size() > best) {
            best = chosen.size();
            best_choice = chosen;
        }
        if (best >= limit) return;
        for (; i < masks.size(); ++i) {
            if (chosen.size() + std::popcount(s_side & ~used) <= best) return;
            if (masks[i] & used) continue;
            chosen.push_back(i);
            run(i + 1, used | masks[i]);
            chosen.pop_back();
            if (best >= limit) return;
        }
    }
};

/// p(s,t) ignoring direct s-t edges, stopping early once `stop_at` paths are packed.
PathPacking pack_paths(const TemporalIndex& index, VertexId s, VertexId t, std::size_t stop_at) {
    PathSearch search{index, s, t, {}, {}, {}, {}};
    search.run();
    std::vector<std::pair<Mask, const TemporalPath*>> candidates;
    for (const auto& [mask, path] : search.found) candidates.emplace_back(mask, &path);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return std::popcount(a.first) < std::popcount(b.first); });
    std::vector<std::pair<Mask, const TemporalPath*>> minimal;
    for (const auto& c : candidates) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const auto& m) { return (m.first & c.first) == m.first; });
        if (!dominated) minimal.push_back(c);
    }
    Packer packer;
    for (const auto& m : minimal) packer.masks.push_back(m.first);
    for (const auto& hop : index.hops(s))
        if (hop.to != t) packer.s_side |= bit(hop.to);
    packer.limit = stop_at;
    packer.run(0, 0);
    PathPacking out;
    out.count = packer.best;
    for (std::size_t i : packer.best_choice) out.paths.push_back(*minimal[i].second);
    return out;
}

std::optional<Mask> find_cut(const TemporalIndex& index, VertexId s, VertexId t, std::size_t from_size) {
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < index.vertex_count(); ++v)
        if (v != s.index() && v != t.index()) others.push_back(v);
    for (std::size_t k = from_size; k <= others.size(); ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            Mask removed = 0;
            for (std::size_t i : pick) removed |= Mask{1} << others[i];
            if (!index.reaches(s, t, removed)) return removed;
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == others.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<VertexId> mask_vertices(Mask m) {
    std::vector<VertexId> out;
    for (std::size_t v = 0; m; ++v, m >>= 1)
        if (m & 1) out.push_back(VertexId(v));
    return out;
}

}  // namespace

PathPacking max_disjoint_paths(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits) {
    const Multigraph& g = tg.graph();
    check_pair(g, s, t);
    check_guard(g, limits);
    TemporalIndex index(tg);
    PathPacking out = pack_paths(index, s, t, std::numeric_limits<std::size_t>::max());
    for (EdgeId e : g.edges_between(s, t)) {
        out.paths.push_back(TemporalPath{{s, t}, {e}});
        ++out.count;
    }
    return out;
}

VertexCut min_vertex_cut(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits) {
    const Multigraph& g = tg.graph();
    check_pair(g, s, t);
    if (g.adjacent(s, t)) throw DomainError("no vertex cut exists between adjacent vertices");
    check_guard(g, limits);
    TemporalIndex index(tg);
    auto mask = find_cut(index, s, t, 0);
    // V - {s, t} always separates non-adjacent s and t.
    auto vertices = mask_vertices(*mask);
    return VertexCut{vertices.size(), vertices};
}

MengerReport menger_report(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits) {
    MengerReport out;
    PathPacking packing = max_disjoint_paths(tg, s, t, limits);
    out.p = packing.count;
    out.paths = std::move(packing.paths);
    if (!tg.graph().adjacent(s, t)) {
        VertexCut cut = min_vertex_cut(tg, s, t, limits);
        out.c = cut.size;
        out.cut = std::move(cut.vertices);
    }
    return out;
}

MengerGap menger_gap(const TemporalGraph& tg, VertexId s, VertexId t, const OracleLimits& limits) {
    VertexCut cut = min_vertex_cut(tg, s, t, limits);
    PathPacking packing = max_disjoint_paths(tg, s, t, limits);
    return MengerGap{packing.count, cut.size, cut.size - packing.count};
}

EdgeMengerReport edge_menger(const TemporalGraph& tg, VertexId s, VertexId t) {
    const Multigraph& g = tg.graph();
    check_pair(g, s, t);
    constexpr auto inf = detail::MaxFlow::kInfinite;

    // One node per (vertex, label of an incident edge).
    std::vector<std::vector<std::pair<Label, int>>> layers(g.vertex_count());
    detail::MaxFlow flow(0);
    std::vector<int> node_vertex;
    auto new_node = [&](int vertex) {
        node_vertex.push_back(vertex);
        return flow.add_node();
    };
    for (VertexId v : g.vertices()) {
        std::vector<Label> labels;
        for (EdgeId e : g.incident_edges(v)) labels.push_back(tg.label(e));
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        for (Label l : labels) layers[v.index()].emplace_back(l, new_node(static_cast<int>(v.index())));
        for (std::size_t i = 1; i < layers[v.index()].size(); ++i)
            flow.add_arc(layers[v.index()][i - 1].second, layers[v.index()][i].second, inf);
    }
    auto node_at = [&](VertexId v, Label l) {
        const auto& lv = layers[v.index()];
        return std::lower_bound(lv.begin(), lv.end(), std::pair<Label, int>{l, -1})->second;
    };
    std::vector<int> gadget_arc(g.edge_count());
    std::unordered_map<int, EdgeId> gadget_of_arc;
    for (const Edge& e : g.edges()) {
        const Label l = tg.label(e.id);
        int in = new_node(-1), out = new_node(-1);
        gadget_arc[e.id.index()] = flow.add_arc(in, out, 1);
        gadget_of_arc[gadget_arc[e.id.index()]] = e.id;
        for (VertexId x : {e.u, e.v}) {
            flow.add_arc(node_at(x, l), in, inf);
            flow.add_arc(out, node_at(x, l), inf);
        }
    }
    const int source = new_node(-1), sink = new_node(-1);
    EdgeMengerReport report;
    if (layers[s.index()].empty() || layers[t.index()].empty()) return report;
    flow.add_arc(source, layers[s.index()].front().second, inf);
    for (const auto& [l, node] : layers[t.index()]) flow.add_arc(node, sink, inf);

    report.value = static_cast<std::size_t>(flow.run(source, sink));

    auto reachable = flow.residual_reachable(source);
    for (const Edge& e : g.edges()) {
        int a = gadget_arc[e.id.index()];
        if (reachable[flow.arc_from(a)] && !reachable[flow.arc(a).to]) report.edge_cut.push_back(e.id);
    }

    for (const auto& unit : flow.decompose(source, sink)) {
        TemporalWalk walk{{s}, {}};
        for (std::size_t i = 0; i < unit.arcs.size(); ++i) {
            auto it = gadget_of_arc.find(unit.arcs[i]);
            if (it == gadget_of_arc.end()) continue;
            walk.edges.push_back(it->second);
            walk.vertices.push_back(VertexId(node_vertex[unit.nodes[i + 2]]));
        }
        report.paths.push_back(walk_to_path(tg, walk));
    }
    return report;
}

namespace {

std::optional<Counterexample> gap_with_index(const TemporalGraph& tg, const TemporalIndex& index) {
    const Multigraph& g = tg.graph();
    for (VertexId s : g.vertices()) {
        for (VertexId t : g.vertices()) {
            if (s == t || g.adjacent(s, t)) continue;
            auto cut = find_cut(index, s, t, 0);
            const std::size_t c = static_cast<std::size_t>(std::popcount(*cut));
            // c <= 1 forces p = c: one path exists exactly when s reaches t.
            if (c < 2) continue;
            PathPacking packing = pack_paths(index, s, t, c);
            if (packing.count < c) return Counterexample{tg.times(), s, t, packing.count, c};
        }
    }
    return std::nullopt;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Next rank-canonical sequence after `a` in lexicographic order over [m]^m.
bool next_canonical(std::vector<Label>& a) {
    const std::size_t m = a.size();
    auto feasible = [&](std::size_t len) {
        std::vector<bool> used(m + 1, false);
        Label top = 0;
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (!used[a[i]]) ++distinct;
            used[a[i]] = true;
            top = std::max(top, a[i]);
        }
        return top - distinct <= m - len;
    };
    for (std::size_t i = m; i-- > 0;) {
        for (Label v = a[i] + 1; v <= m; ++v) {
            a[i] = v;
            if (!feasible(i + 1)) continue;
            for (std::size_t j = i + 1; j < m; ++j) {
                for (a[j] = 1; !feasible(j + 1); ++a[j]) {
                }
            }
            return true;
        }
    }
    return false;
}

std::optional<Counterexample> evaluate_batch(const Multigraph& g, const std::vector<std::vector<Label>>& batch,
                                             unsigned threads) {
    auto shared = std::make_shared<const Multigraph>(g);
    std::vector<std::optional<Counterexample>> results(batch.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{batch.size()};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= batch.size() || i > first_hit.load()) return;
            TemporalGraph tg(shared, TimeFunction(batch[i]));
            TemporalIndex index(tg);
            results[i] = gap_with_index(tg, index);
            if (results[i]) {
                std::size_t seen = first_hit.load();
                while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

}  // namespace

std::optional<Counterexample> find_menger_gap(const TemporalGraph& tg, const OracleLimits& limits) {
    check_guard(tg.graph(), limits);
    TemporalIndex index(tg);
    return gap_with_index(tg, index);
}

std::optional<Counterexample> falsify_mengerian(const Multigraph& g, const FalsifyOptions& options) {
    check_guard(g, options.limits);
    const std::size_t m = g.edge_count();
    if (m == 0) return std::nullopt;
    constexpr std::size_t kBatch = 1024;
    std::vector<std::vector<Label>> batch;

    if (const auto* ex = std::get_if<Exhaustive>(&options.mode)) {
        if (m > ex->max_edges)
            throw ResourceError("exhaustive falsification limited to " + std::to_string(ex->max_edges) +
                                " edges, graph has " + std::to_string(m));
        std::vector<Label> current(m, 1);
        bool more = true;
        while (more) {
            batch.clear();
            while (more && batch.size() < kBatch) {
                batch.push_back(current);
                more = next_canonical(current);
            }
            if (auto hit = evaluate_batch(g, batch, options.threads)) return hit;
        }
        return std::nullopt;
    }

    const auto& rnd = std::get<Randomized>(options.mode);
    for (std::uint64_t start = 0; start < rnd.samples; start += kBatch) {
        batch.clear();
        for (std::uint64_t i = start; i < std::min<std::uint64_t>(rnd.samples, start + kBatch); ++i) {
            std::uint64_t state = splitmix64(rnd.seed ^ splitmix64(i));
            std::vector<Label> labels(m);
            for (Label& l : labels) {
                state = splitmix64(state);
                l = static_cast<Label>(1 + state % m);
            }
            batch.push_back(std::move(labels));
        }
        if (auto hit = evaluate_batch(g, batch, options.threads)) return hit;
    }
    return std::nullopt;
}

}  // namespace mengerian
