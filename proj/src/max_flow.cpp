#include "mwis/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mwis {

FlowNetwork::FlowNetwork(std::size_t nodes) : head_(nodes) {}

std::size_t FlowNetwork::add_node()
{
    head_.emplace_back();
    return head_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, Capacity capacity)
{
    if (from >= head_.size() || to >= head_.size()) throw std::out_of_range("arc endpoint out of range");
    if (capacity < 0) throw std::invalid_argument("negative arc capacity");
    std::size_t index = arcs_.size();
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    head_[from].push_back(index);
    head_[to].push_back(index + 1);
    return index;
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink)
{
    level_.assign(head_.size(), -1);
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::size_t u = queue[i];
        for (std::size_t a : head_[u]) {
            if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
                level_[arcs_[a].to] = level_[u] + 1;
                queue.push_back(arcs_[a].to);
            }
        }
    }
    return level_[sink] >= 0;
}

FlowNetwork::Capacity FlowNetwork::blocking_flow(std::size_t source, std::size_t sink)
{
    // Iterative DFS over the level graph; deep level graphs must not exhaust the stack.
    Capacity total = 0;
    std::vector<std::size_t> path;
    std::size_t u = source;
    while (true) {
        if (u == sink) {
            Capacity bottleneck = std::numeric_limits<Capacity>::max();
            for (std::size_t a : path) bottleneck = std::min(bottleneck, arcs_[a].residual);
            for (std::size_t a : path) {
                arcs_[a].residual -= bottleneck;
                arcs_[a ^ 1].residual += bottleneck;
            }
            total += bottleneck;
            path.clear();
            u = source;
            continue;
        }
        bool advanced = false;
        for (std::size_t& i = next_[u]; i < head_[u].size(); ++i) {
            const Arc& arc = arcs_[head_[u][i]];
            if (arc.residual > 0 && level_[arc.to] == level_[u] + 1) {
                path.push_back(head_[u][i]);
                u = arc.to;
                advanced = true;
                break;
            }
        }
        if (advanced) continue;
        level_[u] = -1;
        if (path.empty()) break;
        std::size_t a = path.back();
        path.pop_back();
        u = arcs_[a ^ 1].to;
        ++next_[u];
    }
    return total;
}

FlowNetwork::Capacity FlowNetwork::max_flow(std::size_t source, std::size_t sink)
{
    if (source >= head_.size() || sink >= head_.size() || source == sink)
        throw std::invalid_argument("invalid source or sink");
    Capacity total = 0;
    while (build_levels(source, sink)) {
        next_.assign(head_.size(), 0);
        total += blocking_flow(source, sink);
    }
    return total;
}

std::vector<bool> FlowNetwork::residual_reachable(std::size_t source) const
{
    std::vector<bool> seen(head_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t a : head_[u]) {
            if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
                seen[arcs_[a].to] = true;
                stack.push_back(arcs_[a].to);
            }
        }
    }
    return seen;
}

} // namespace mwis
