#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mwis {

/// Directed network with integer capacities, solved with Dinic's algorithm.
class FlowNetwork {
public:
    using Capacity = std::int64_t;

    explicit FlowNetwork(std::size_t nodes = 0);

    std::size_t add_node();
    /// Returns the arc index; its reverse arc is index ^ 1.
    std::size_t add_arc(std::size_t from, std::size_t to, Capacity capacity);

    [[nodiscard]] std::size_t num_nodes() const noexcept { return head_.size(); }
    [[nodiscard]] Capacity flow(std::size_t arc) const { return arcs_[arc ^ 1].residual; }
    [[nodiscard]] Capacity capacity(std::size_t arc) const { return arcs_[arc].residual + arcs_[arc ^ 1].residual; }

    /// Maximum s-t flow. Calling it again continues from the current flow.
    Capacity max_flow(std::size_t source, std::size_t sink);

    /// Nodes reachable from `source` along arcs with positive residual capacity.
    [[nodiscard]] std::vector<bool> residual_reachable(std::size_t source) const;

private:
    struct Arc {
        std::size_t to;
        Capacity residual;
    };

    bool build_levels(std::size_t source, std::size_t sink);
    Capacity blocking_flow(std::size_t source, std::size_t sink);

    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> head_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

} // namespace mwis
