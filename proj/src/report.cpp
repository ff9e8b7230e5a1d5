#include "mengerian/report.hpp"

#include "mengerian/errors.hpp"

namespace mengerian {

using nlohmann::json;

namespace {

json names_of(const Multigraph& g, std::span<const VertexId> vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(g.name(v));
    return out;
}

json ids_of(std::span<const VertexId> vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(v.value);
    return out;
}

json part_to_json(const Multigraph& g, const CrossedPart& p) {
    return {{"first", p.first.value}, {"second", p.second.value}, {"vertices", ids_of(p.vertices)},
            {"names", names_of(g, p.vertices)}};
}

}  // namespace

json embedding_to_json(const Multigraph& g, const MEmbedding& emb) {
    const Pattern& f = pattern(emb.pattern);
    json branch = json::array();
    for (std::size_t p = 0; p < emb.branch_map.size(); ++p)
        branch.push_back({{"pattern_vertex", f.graph.name(VertexId(p))},
                          {"vertex", emb.branch_map[p].value},
                          {"name", g.name(emb.branch_map[p])}});
    json segments = json::array();
    for (const Segment& seg : emb.segments) {
        json hops = json::array();
        for (const auto& hop : seg.hops) {
            json h = json::array();
            for (EdgeId e : hop) h.push_back(e.value);
            hops.push_back(h);
        }
        segments.push_back({{"from", f.graph.name(seg.pattern_u)},
                            {"to", f.graph.name(seg.pattern_v)},
                            {"path", ids_of(seg.path)},
                            {"hops", hops}});
    }
    return {{"pattern", std::string(to_string(emb.pattern))}, {"branch_map", branch}, {"segments", segments}};
}

json witness_to_json(const Witness& w, const WitnessCheck& check) {
    json times = json::object();
    for (std::size_t e = 0; e < w.times.size(); ++e) times[std::to_string(e)] = w.times[EdgeId(e)];
    json verification = {{"status", std::string(to_string(check.status))}, {"message", check.message}};
    verification["p"] = check.p ? json(*check.p) : json(nullptr);
    verification["c"] = check.c ? json(*check.c) : json(nullptr);
    return {{"s", w.s.value},           {"t", w.t.value},           {"times", times},
            {"claimed_p", w.claimed_p}, {"claimed_c", w.claimed_c}, {"verification", verification}};
}

json crossed_to_json(const Multigraph& g, const CrossedStructure& cs) {
    json out = {{"kind", std::string(to_string(cs.kind))},
                {"exact", cs.exact},
                {"h", ids_of(cs.h)},
                {"chain", ids_of(cs.chain.vertices)},
                {"chain_names", names_of(g, cs.chain.vertices)},
                {"a1", part_to_json(g, cs.a1)},
                {"a2", part_to_json(g, cs.a2)},
                {"b2", part_to_json(g, cs.b2)}};
    out["b1"] = cs.b1 ? part_to_json(g, *cs.b1) : json(nullptr);
    return out;
}

json report_to_json(const Multigraph& g, const Proof& proof, const Timings& timings) {
    const Verdict& v = proof.verdict;
    json out;
    out["verdict"] = v.mengerian() ? "mengerian" : "non_mengerian";
    out["pattern"] = v.evidence ? json(std::string(to_string(v.evidence->pattern))) : json(nullptr);
    out["embedding"] = v.evidence ? embedding_to_json(g, *v.evidence) : json(nullptr);
    out["witness"] = proof.witness ? witness_to_json(*proof.witness, proof.check) : json(nullptr);
    json crossed = json::array();
    for (const CrossedStructure& cs : v.diagnostics.crossed) crossed.push_back(crossed_to_json(g, cs));
    out["diagnostics"] = {{"blocks", v.diagnostics.blocks},
                          {"chains", v.diagnostics.chains},
                          {"crossed_structures", crossed},
                          {"timings_ms", {{"recognize", timings.recognize_ms}, {"witness", timings.witness_ms}}}};
    return out;
}

MEmbedding embedding_from_json(const json& j) {
    try {
        auto id = parse_pattern_id(j.at("pattern").get<std::string>());
        if (!id) throw ParseError(0, "unknown pattern in report");
        const Pattern& f = pattern(*id);
        MEmbedding emb{*id, std::vector<VertexId>(f.graph.vertex_count()), {}};
        for (const json& b : j.at("branch_map")) {
            auto p = f.graph.find(b.at("pattern_vertex").get<std::string>());
            if (!p) throw ParseError(0, "unknown pattern vertex in report");
            emb.branch_map[p->index()] = VertexId(b.at("vertex").get<std::uint32_t>());
        }
        for (const json& s : j.at("segments")) {
            auto u = f.graph.find(s.at("from").get<std::string>());
            auto v = f.graph.find(s.at("to").get<std::string>());
            if (!u || !v) throw ParseError(0, "unknown segment end in report");
            Segment seg{*u, *v, {}, {}};
            for (const json& x : s.at("path")) seg.path.emplace_back(x.get<std::uint32_t>());
            for (const json& hop : s.at("hops")) {
                std::vector<EdgeId> h;
                for (const json& e : hop) h.emplace_back(e.get<std::uint32_t>());
                seg.hops.push_back(std::move(h));
            }
            emb.segments.push_back(std::move(seg));
        }
        return emb;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed embedding: ") + e.what());
    }
}

Witness witness_from_json(const json& j) {
    try {
        const json& times = j.at("times");
        std::vector<Label> labels(times.size());
        for (auto it = times.begin(); it != times.end(); ++it) {
            std::size_t e = std::stoul(it.key());
            if (e >= labels.size()) throw ParseError(0, "witness edge ids are not dense");
            labels[e] = it.value().get<Label>();
        }
        return Witness{TimeFunction(std::move(labels)), VertexId(j.at("s").get<std::uint32_t>()),
                       VertexId(j.at("t").get<std::uint32_t>()), j.at("claimed_p").get<std::size_t>(),
                       j.at("claimed_c").get<std::size_t>()};
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed witness: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("malformed witness: ") + e.what());
    }
}

}  // namespace mengerian
