#include "detail/max_flow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mengerian::detail {

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
    int index = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    arcs_.push_back({from, 0, 0});
    adjacency_[from].push_back(index);
    adjacency_[to].push_back(index + 1);
    return index;
}

bool MaxFlow::build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    std::deque<int> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int a : adjacency_[x]) {
            const Arc& arc = arcs_[a];
            if (arc.capacity - arc.flow > 0 && level_[arc.to] < 0) {
                level_[arc.to] = level_[x] + 1;
                queue.push_back(arc.to);
            }
        }
    }
    return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit) {
    if (node == sink) return limit;
    for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
        int a = adjacency_[node][i];
        Arc& arc = arcs_[a];
        if (arc.capacity - arc.flow <= 0 || level_[arc.to] != level_[node] + 1) continue;
        std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.capacity - arc.flow));
        if (pushed > 0) {
            arc.flow += pushed;
            arcs_[a ^ 1].flow -= pushed;
            return pushed;
        }
    }
    return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
        cursor_.assign(adjacency_.size(), 0);
        while (std::int64_t pushed = push(source, sink, kInfinite)) total += pushed;
    }
    return total;
}

std::vector<bool> MaxFlow::residual_reachable(int source) const {
    std::vector<bool> seen(adjacency_.size(), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int a : adjacency_[x]) {
            const Arc& arc = arcs_[a];
            if (arc.capacity - arc.flow > 0 && !seen[arc.to]) {
                seen[arc.to] = true;
                queue.push_back(arc.to);
            }
        }
    }
    return seen;
}

std::vector<MaxFlow::FlowPath> MaxFlow::decompose(int source, int sink) {
    std::vector<FlowPath> out;
    std::vector<int> on_stack(adjacency_.size(), -1);
    auto next_arc = [&](int x) {
        for (int a : adjacency_[x])
            if (a % 2 == 0 && arcs_[a].flow > 0) return a;
        return -1;
    };
    while (next_arc(source) >= 0) {
        FlowPath path{{source}, {}};
        on_stack[source] = 0;
        while (path.nodes.back() != sink) {
            int a = next_arc(path.nodes.back());
            if (a < 0) throw std::logic_error("flow decomposition lost conservation");
            int y = arcs_[a].to;
            if (on_stack[y] >= 0) {
                const std::size_t j = static_cast<std::size_t>(on_stack[y]);
                arcs_[a].flow -= 1;
                for (std::size_t i = j; i < path.arcs.size(); ++i) arcs_[path.arcs[i]].flow -= 1;
                for (std::size_t i = j + 1; i < path.nodes.size(); ++i) on_stack[path.nodes[i]] = -1;
                path.nodes.resize(j + 1);
                path.arcs.resize(j);
                continue;
            }
            on_stack[y] = static_cast<int>(path.nodes.size());
            path.nodes.push_back(y);
            path.arcs.push_back(a);
        }
        for (int a : path.arcs) arcs_[a].flow -= 1;
        for (int x : path.nodes) on_stack[x] = -1;
        out.push_back(std::move(path));
    }
    return out;
}

}  // namespace mengerian::detail
