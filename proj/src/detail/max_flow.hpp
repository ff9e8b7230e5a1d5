#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace mengerian::detail {

/// Dinic's algorithm on an integer-capacity digraph.
class MaxFlow {
public:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

    struct Arc {
        int to;
        std::int64_t capacity;
        std::int64_t flow;
    };

    explicit MaxFlow(int nodes) : adjacency_(nodes) {}

    int add_node() {
        adjacency_.emplace_back();
        return static_cast<int>(adjacency_.size()) - 1;
    }
    int node_count() const { return static_cast<int>(adjacency_.size()); }

    /// Returns the arc index; its reverse residual arc is index ^ 1.
    int add_arc(int from, int to, std::int64_t capacity);

    std::int64_t run(int source, int sink);

    const Arc& arc(int index) const { return arcs_[index]; }
    Arc& arc(int index) { return arcs_[index]; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int arc_from(int index) const { return arcs_[index ^ 1].to; }
    const std::vector<int>& out_arcs(int node) const { return adjacency_[node]; }

    /// Nodes reachable from `source` in the residual network.
    std::vector<bool> residual_reachable(int source) const;

    struct FlowPath {
        std::vector<int> nodes;
        std::vector<int> arcs;
    };

    /// Splits the current flow into unit source-sink paths, dropping any flow
    /// cycles met on the way. Consumes the flow.
    std::vector<FlowPath> decompose(int source, int sink);

private:
    bool build_levels(int source, int sink);
    std::int64_t push(int node, int sink, std::int64_t limit);

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
};

}  // namespace mengerian::detail
