#pragma once

#include <json.hpp>

#include "mengerian/recognizer.hpp"

namespace mengerian {

struct Timings {
    double recognize_ms = 0;
    double witness_ms = 0;
};

nlohmann::json embedding_to_json(const Multigraph& g, const MEmbedding& emb);
nlohmann::json witness_to_json(const Witness& w, const WitnessCheck& check);
nlohmann::json crossed_to_json(const Multigraph& g, const CrossedStructure& cs);

/// verdict, pattern, embedding, witness, diagnostics.
nlohmann::json report_to_json(const Multigraph& g, const Proof& proof, const Timings& timings = {});

/// Readers for re-validating a saved report; throw ParseError(0, ...) on
/// malformed input.
MEmbedding embedding_from_json(const nlohmann::json& j);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace mengerian
