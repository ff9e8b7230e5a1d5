#include "mengerian/witness.hpp"

#include <algorithm>

#include "mengerian/errors.hpp"

namespace mengerian {

BaseLabeling base_labeling(PatternId id) {
    const Pattern& f = pattern(id);
    return {f.bad_labeling, f.s, f.t};
}

LiftedLabeling lift_labeling(const Multigraph& host, const MEmbedding& emb, const TimeFunction& base) {
    if (auto error = embedding_error(host, emb)) throw ContractError("cannot lift along an invalid embedding: " + *error);
    const Multigraph& p = pattern(emb.pattern).graph;
    if (base.size() != p.edge_count()) throw ContractError("base labelling does not match the pattern");

    std::vector<Label> host_label(host.edge_count(), 0);
    for (const Segment& seg : emb.segments) {
        auto pattern_edges = p.edges_between(seg.pattern_u, seg.pattern_v);
        for (const auto& hop : seg.hops)
            for (std::size_t k = 0; k < hop.size(); ++k) host_label[hop[k].index()] = base[pattern_edges[k]];
    }
    std::vector<EdgeId> edges = emb.edges();
    LiftedLabeling out{edge_subgraph(host, edges), {}};
    std::vector<Label> labels;
    for (EdgeId e : out.sub.host_edge) labels.push_back(host_label[e.index()]);
    out.times = TimeFunction(std::move(labels));
    return out;
}

TimeFunction extend_to_host(const Multigraph& g, const LiftedLabeling& h, VertexId s, VertexId t) {
    g.check(s);
    g.check(t);
    if (h.times.size() != h.sub.graph.edge_count()) throw ContractError("labelling does not match its subgraph");
    std::vector<std::optional<Label>> inside(g.edge_count());
    for (std::size_t i = 0; i < h.sub.host_edge.size(); ++i) {
        EdgeId host = h.sub.host_edge[i];
        EdgeId local(i);
        if (!g.contains(host)) throw ContractError("subgraph edge outside the host");
        const Edge& a = g.edge(host);
        const Edge& b = h.sub.graph.edge(local);
        if (!a.joins(h.sub.host_vertex[b.u.index()], h.sub.host_vertex[b.v.index()]))
            throw ContractError("subgraph edge endpoints differ from the host");
        inside[host.index()] = h.times[local];
    }
    const Label top = h.times.lifetime();
    std::vector<Label> labels;
    for (const Edge& e : g.edges()) {
        if (inside[e.id.index()])
            labels.push_back(*inside[e.id.index()] + 1);
        else if (e.u == t || e.v == t)
            labels.push_back(1);
        else
            labels.push_back(top + 2);
    }
    return TimeFunction(std::move(labels));
}

namespace {

/// Degree-2 branch vertex `x` of the pattern moved to position `k` of the
/// path joining its two pattern neighbours.
struct Slide {
    std::size_t first;  // segment index towards the smaller neighbour
    std::size_t second;
    std::vector<VertexId> path;  // smaller neighbour .. x .. larger neighbour
    std::vector<std::vector<EdgeId>> hops;
    std::size_t original;
};

Slide thread_through(const MEmbedding& emb, VertexId x) {
    std::vector<std::size_t> touching;
    for (std::size_t i = 0; i < emb.segments.size(); ++i)
        if (emb.segments[i].pattern_u == x || emb.segments[i].pattern_v == x) touching.push_back(i);
    if (touching.size() != 2) throw ContractError("Menger pair vertex must have pattern degree 2");
    Slide out{touching[0], touching[1], {}, {}, 0};
    // Segment towards x from the first neighbour, then away from x.
    const Segment& a = emb.segments[out.first];
    const Segment& b = emb.segments[out.second];
    std::vector<VertexId> pa = a.path;
    auto ha = a.hops;
    if (a.pattern_u == x) {
        std::reverse(pa.begin(), pa.end());
        std::reverse(ha.begin(), ha.end());
    }
    std::vector<VertexId> pb = b.path;
    auto hb = b.hops;
    if (b.pattern_v == x) {
        std::reverse(pb.begin(), pb.end());
        std::reverse(hb.begin(), hb.end());
    }
    out.path = pa;
    out.path.insert(out.path.end(), pb.begin() + 1, pb.end());
    out.hops = ha;
    out.hops.insert(out.hops.end(), hb.begin(), hb.end());
    out.original = pa.size() - 1;
    return out;
}

void place(MEmbedding& emb, VertexId x, const Slide& slide, std::size_t k) {
    emb.branch_map[x.index()] = slide.path[k];
    auto fill = [&](Segment& seg, std::size_t from, std::size_t to) {
        seg.path.assign(slide.path.begin() + static_cast<std::ptrdiff_t>(from),
                        slide.path.begin() + static_cast<std::ptrdiff_t>(to) + 1);
        seg.hops.assign(slide.hops.begin() + static_cast<std::ptrdiff_t>(from),
                        slide.hops.begin() + static_cast<std::ptrdiff_t>(to));
    };
    Segment& a = emb.segments[slide.first];
    Segment& b = emb.segments[slide.second];
    fill(a, 0, k);
    fill(b, k, slide.path.size() - 1);
    if (a.pattern_u == x) {
        std::reverse(a.path.begin(), a.path.end());
        std::reverse(a.hops.begin(), a.hops.end());
    }
    if (b.pattern_v == x) {
        std::reverse(b.path.begin(), b.path.end());
        std::reverse(b.hops.begin(), b.hops.end());
    }
}

/// Original position first, then the others along the thread.
std::vector<std::size_t> positions(const Slide& slide) {
    std::vector<std::size_t> out{slide.original};
    for (std::size_t k = 1; k + 1 < slide.path.size(); ++k)
        if (k != slide.original) out.push_back(k);
    return out;
}

}  // namespace

std::optional<Witness> make_witness(const Multigraph& g, const MEmbedding& evidence) {
    if (auto error = embedding_error(g, evidence)) throw ContractError("invalid evidence: " + *error);
    const Pattern& f = pattern(evidence.pattern);
    const Slide s_slide = thread_through(evidence, f.s);
    const Slide t_slide = thread_through(evidence, f.t);
    for (std::size_t i : positions(s_slide)) {
        for (std::size_t j : positions(t_slide)) {
            MEmbedding emb = evidence;
            place(emb, f.s, s_slide, i);
            place(emb, f.t, t_slide, j);
            if (g.adjacent(emb.source(), emb.target())) continue;
            if (auto error = embedding_error(g, emb)) throw ContractError("sliding the Menger pair broke the embedding: " + *error);
            LiftedLabeling lifted = lift_labeling(g, emb, f.bad_labeling);
            return Witness{extend_to_host(g, lifted, emb.source(), emb.target()), emb.source(), emb.target(), 1, 2};
        }
    }
    return std::nullopt;
}

std::string_view to_string(WitnessCheck::Status status) {
    switch (status) {
        case WitnessCheck::Status::Verified: return "verified";
        case WitnessCheck::Status::Failed: return "failed";
        case WitnessCheck::Status::Skipped: return "skipped";
    }
    return "?";
}

WitnessCheck verify_witness(const Multigraph& g, const Witness& w, const OracleLimits& limits) {
    WitnessCheck out;
    if (!g.contains(w.s) || !g.contains(w.t) || w.s == w.t) {
        out.status = WitnessCheck::Status::Failed;
        out.message = "invalid Menger pair";
        return out;
    }
    if (w.times.size() != g.edge_count()) {
        out.status = WitnessCheck::Status::Failed;
        out.message = "time-function does not cover the graph";
        return out;
    }
    if (g.adjacent(w.s, w.t)) {
        out.status = WitnessCheck::Status::Failed;
        out.message = "s and t are adjacent";
        return out;
    }
    TemporalGraph tg(g, w.times);
    try {
        out.c = min_vertex_cut(tg, w.s, w.t, limits).size;
        out.p = max_disjoint_paths(tg, w.s, w.t, limits).count;
    } catch (const ResourceError& e) {
        out.status = WitnessCheck::Status::Skipped;
        out.message = e.what();
        return out;
    }
    if (*out.p == w.claimed_p && *out.c == w.claimed_c) {
        out.status = WitnessCheck::Status::Verified;
        out.message = "p = " + std::to_string(*out.p) + ", c = " + std::to_string(*out.c);
    } else {
        out.status = WitnessCheck::Status::Failed;
        out.message = "claimed p = " + std::to_string(w.claimed_p) + ", c = " + std::to_string(w.claimed_c) +
                      " but found p = " + std::to_string(*out.p) + ", c = " + std::to_string(*out.c);
    }
    return out;
}

}  // namespace mengerian
