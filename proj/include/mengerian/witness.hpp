#pragma once

#include <optional>
#include <string>

#include "mengerian/menger.hpp"
#include "mengerian/patterns.hpp"

namespace mengerian {

/// A time-function and a non-adjacent pair with p < c.
struct Witness {
    TimeFunction times;
    VertexId s;
    VertexId t;
    std::size_t claimed_p = 0;
    std::size_t claimed_c = 0;
};

struct BaseLabeling {
    TimeFunction times;
    VertexId s;
    VertexId t;
};

/// The pattern's own bad labelling with its Menger pair.
BaseLabeling base_labeling(PatternId id);

/// Labels on the embedded subgraph `edge_subgraph(host, emb.edges())`.
struct LiftedLabeling {
    Subgraph sub;
    TimeFunction times;  // indexed by sub.graph edge ids
};

/// Every hop of a segment gets the label set of the pattern multiedge it
/// replaces; parallel edges are matched in increasing id order.
/// Throws ContractError when the embedding does not validate.
LiftedLabeling lift_labeling(const Multigraph& host, const MEmbedding& emb, const TimeFunction& base);

/// Labels the whole host: H-edges move up by one, other edges at t get 1,
/// all remaining edges get max + 2. `s`, `t` are host ids.
/// Throws ContractError when `h` was not taken from `g`.
TimeFunction extend_to_host(const Multigraph& g, const LiftedLabeling& h, VertexId s, VertexId t);

/// Base labelling lifted along the embedding and extended to g. When the
/// images of the pattern's s and t are adjacent in g, the two are slid along
/// their threads to a non-adjacent placement. nullopt when none exists.
std::optional<Witness> make_witness(const Multigraph& g, const MEmbedding& evidence);

struct WitnessCheck {
    enum class Status { Verified, Failed, Skipped };

    Status status = Status::Skipped;
    std::optional<std::size_t> p;
    std::optional<std::size_t> c;
    std::string message;
};

std::string_view to_string(WitnessCheck::Status status);

/// Recomputes p and c with the exact oracles and compares them to the claims.
/// Oracle guard violations give Skipped.
WitnessCheck verify_witness(const Multigraph& g, const Witness& w, const OracleLimits& limits = {});

}  // namespace mengerian
