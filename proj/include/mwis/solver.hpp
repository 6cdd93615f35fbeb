#pragma once

#include "mwis/graph.hpp"
#include "mwis/trace.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mwis {

struct ReducerConfig;

/// Exhaustive search. Among optimal sets the lexicographically smallest sorted
/// id list is returned. Throws std::invalid_argument above `max_vertices`.
Solution brute_force_mwis(const WeightedGraph& g, std::size_t max_vertices = 20);

/// All independent sets of G[within] (including the empty set), or nullopt if
/// there are more than `cap`. `within` defaults to all active vertices.
std::optional<std::vector<VertexSet>> enumerate_independent_sets(const WeightedGraph& g,
                                                                 std::span<const VertexId> within,
                                                                 std::size_t cap);

/// Maximum weight independent set of G[within] for |within| <= 64.
Solution exact_mwis(const WeightedGraph& g, std::span<const VertexId> within);
Weight exact_mwis_weight(const WeightedGraph& g, std::span<const VertexId> within);

/// Greedy partition of `within` into cliques, heaviest vertices first.
std::vector<VertexSet> greedy_clique_partition(const WeightedGraph& g, std::span<const VertexId> within);

/// Upper bound on α(G[within]): sum over a clique partition of the heaviest member.
Weight clique_cover_bound(const WeightedGraph& g, std::span<const VertexId> within);
Weight clique_cover_bound(const WeightedGraph& g);

/// Heaviest-first greedy independent set.
Solution greedy_mwis(const WeightedGraph& g);

struct SolveBudget {
    std::size_t node_limit = 2'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct SolveResult {
    Solution solution;
    bool optimal = false;
    /// Upper bound on α(G); equals solution.weight when optimal.
    Weight upper_bound = 0;
    std::size_t nodes = 0;
};

/// Branch and reduce with a clique-cover bound. On budget exhaustion returns
/// a greedy solution with optimal == false and the clique-cover bound.
SolveResult branch_and_reduce_solve(const WeightedGraph& g, const ReducerConfig& config, const SolveBudget& budget = {});
SolveResult branch_and_reduce_solve(const WeightedGraph& g, const SolveBudget& budget = {});

} // namespace mwis
