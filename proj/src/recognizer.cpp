#include "mengerian/recognizer.hpp"

namespace mengerian {

Verdict recognize(const Multigraph& g) {
    Verdict out;
    for (const Subgraph& block : biconnected_components(g)) {
        const Multigraph& b = block.graph;
        Subgraph simple = underlying_simple(b);
        if (simple.graph.max_simple_degree() <= 3 && !b.has_multiedges()) continue;
        ++out.diagnostics.blocks;
        if (auto gem = find_f3_subdivision(simple.graph)) {
            out.evidence = lift_to_host(lift_to_host(*gem, simple), block);
            return out;
        }
        for (const Chain& chain : maximal_chains(b)) {
            ++out.diagnostics.chains;
            auto outcome = examine_chain(b, chain);
            if (!outcome) continue;
            if (auto* emb = std::get_if<MEmbedding>(&*outcome)) {
                out.evidence = lift_to_host(*emb, block);
                return out;
            }
            out.diagnostics.crossed.push_back(lift_to_host(std::get<CrossedStructure>(*outcome), block));
        }
    }
    return out;
}

Proof recognize_with_proof(const Multigraph& g, const OracleLimits& limits) {
    Proof out{recognize(g), std::nullopt, {}};
    if (out.verdict.mengerian()) {
        out.check.message = "no witness for a Mengerian graph";
        return out;
    }
    out.witness = make_witness(g, *out.verdict.evidence);
    if (!out.witness) {
        out.check.status = WitnessCheck::Status::Failed;
        out.check.message = "every placement of s and t along their threads is adjacent in the host";
        return out;
    }
    out.check = verify_witness(g, *out.witness, limits);
    return out;
}

std::vector<CrossedStructure> find_crossed_structures(const Multigraph& g) {
    return recognize(g).diagnostics.crossed;
}

}  // namespace mengerian
