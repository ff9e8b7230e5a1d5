#include "detail/temporal_index.hpp"

#include <algorithm>

#include "mengerian/errors.hpp"

namespace mengerian::detail {

TemporalIndex::TemporalIndex(const TemporalGraph& tg) : n_(tg.graph().vertex_count()) {
    const Multigraph& g = tg.graph();
    if (n_ > 64) throw ResourceError("exact oracles support at most 64 vertices");
    for (const Edge& e : g.edges())
        arcs_.push_back({static_cast<std::uint8_t>(e.u.index()), static_cast<std::uint8_t>(e.v.index()),
                         tg.label(e.id), e.id});
    std::stable_sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.label < b.label; });
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        if (i == 0 || arcs_[i].label != arcs_[i - 1].label) group_start_.push_back(i);
    group_start_.push_back(arcs_.size());

    hops_.resize(n_);
    for (VertexId v : g.vertices()) {
        for (const Neighbor& nb : g.neighbors(v)) {
            Hop hop{nb.vertex, {}};
            for (EdgeId e : nb.edges) hop.edges.emplace_back(tg.label(e), e);
            std::sort(hop.edges.begin(), hop.edges.end());
            hops_[v.index()].push_back(std::move(hop));
        }
    }
}

bool TemporalIndex::reaches(VertexId s, VertexId t, Mask removed, Mask removed_edges) const {
    if (removed & (bit(s) | bit(t))) return false;
    if (s == t) return true;
    Mask reached = bit(s);
    const Mask target = bit(t);
    for (std::size_t gi = 0; gi + 1 < group_start_.size(); ++gi) {
        const std::size_t begin = group_start_[gi], end = group_start_[gi + 1];
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = begin; i < end; ++i) {
                const Arc& a = arcs_[i];
                if (removed_edges && (removed_edges >> a.id.index() & 1)) continue;
                const Mask mu = Mask{1} << a.u, mv = Mask{1} << a.v;
                if ((reached & mu) && !(reached & mv) && !(removed & mv)) {
                    reached |= mv;
                    changed = true;
                } else if ((reached & mv) && !(reached & mu) && !(removed & mu)) {
                    reached |= mu;
                    changed = true;
                }
            }
            if (reached & target) return true;
        }
    }
    return false;
}

}  // namespace mengerian::detail
