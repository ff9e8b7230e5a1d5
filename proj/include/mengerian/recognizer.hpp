#pragma once

#include <optional>
#include <vector>

#include "mengerian/patterns.hpp"
#include "mengerian/witness.hpp"

namespace mengerian {

struct Diagnostics {
    std::size_t blocks = 0;          // blocks searched
    std::size_t chains = 0;          // chains identified and examined
    std::vector<CrossedStructure> crossed;
};

/// Mengerian when `evidence` is empty; otherwise an m-subdivision of a
/// forbidden pattern inside the graph.
struct Verdict {
    std::optional<MEmbedding> evidence;
    Diagnostics diagnostics;

    bool mengerian() const { return !evidence; }
};

/// Decides whether g is Mengerian. Blocks are searched in order; inside a
/// block the gem is tried first, then every maximal chain.
Verdict recognize(const Multigraph& g);

struct Proof {
    Verdict verdict;
    std::optional<Witness> witness;
    WitnessCheck check;  // Skipped when there is no witness or g is past the oracle guard
};

Proof recognize_with_proof(const Multigraph& g, const OracleLimits& limits = {});

}  // namespace mengerian
