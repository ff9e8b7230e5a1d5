#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mengerian/multigraph.hpp"

namespace mengerian::detail {

/// Maximal path whose internal vertices have simple degree 2, between two
/// vertices of simple degree != 2.
struct Thread {
    std::vector<VertexId> path;
    std::vector<std::size_t> multiplicity;  // per hop

    Thread reversed() const;
};

/// Every thread once; closed threads through a single vertex included.
std::vector<Thread> threads_of(const Multigraph& g);

/// Splits host hops into consecutive non-empty blocks, block j matching
/// pattern hop j (equal multiplicity when `exact`, at least otherwise).
/// Returns block boundaries 0 = b_0 < ... < b_k = hops, earliest first.
std::optional<std::vector<std::size_t>> split_thread(std::span<const std::size_t> host_mult,
                                                     std::span<const std::size_t> pattern_mult, bool exact);

}  // namespace mengerian::detail
