#pragma once

#include "mwis/graph.hpp"
#include "mwis/rule.hpp"
#include "mwis/trace.hpp"

#include <span>
#include <utility>
#include <vector>

namespace mwis {

// Every operation below either leaves the graph untouched and returns nullopt,
// or mutates it and returns the event describing the mutation. Candidate
// vertices must be active (std::invalid_argument otherwise).

RuleOutcome try_degree_one(WeightedGraph& g, VertexId v);
/// Triangle and V-shape cases for a degree-two vertex.
RuleOutcome try_degree_two(WeightedGraph& g, VertexId v);
/// 3-path, 4-path, 4-cycle, 5-cycle and 6-cycle with v as one of the
/// degree-two vertices, tried in that order.
RuleOutcome try_path_cycle(WeightedGraph& g, VertexId v);

RuleOutcome try_neighborhood_removal(WeightedGraph& g, VertexId v);
RuleOutcome try_heavy_vertex(WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_clique_neighborhood_removal(WeightedGraph& g, VertexId v);
RuleOutcome try_neighborhood_folding(WeightedGraph& g, VertexId v);
RuleOutcome try_generalized_fold(WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_two_vertex_neighborhood_removal(WeightedGraph& g, VertexId u, VertexId v);
RuleOutcome try_heavy_set(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets = {});

/// Simplicial vertex, or simplicial weight transfer when v is not heavy
/// enough to be included outright.
RuleOutcome try_simplicial(WeightedGraph& g, VertexId v);

/// Excludes v when N[u] ⊆ N[v] and ω(v) ≤ ω(u).
RuleOutcome try_domination(WeightedGraph& g, VertexId u, VertexId v);
/// Excludes v when ω(N(u) \ N(v)) ≤ ω(u) for the edge uv.
RuleOutcome try_basic_single_edge(WeightedGraph& g, VertexId u, VertexId v);
/// Excludes N(u) ∩ N(v) when ω(v) ≥ ω(N(v)) - ω(u) for the edge uv.
RuleOutcome try_extended_single_edge(WeightedGraph& g, VertexId u, VertexId v);
RuleOutcome try_twin(WeightedGraph& g, VertexId u, VertexId v);

/// Pairs (u, v), u < v, of non-isolated vertices with identical neighborhoods.
std::vector<std::pair<VertexId, VertexId>> find_twins(const WeightedGraph& g);

// Pair rules anchored at a single vertex, trying partners in ascending order.
RuleOutcome reduce_domination_at(WeightedGraph& g, VertexId v);
RuleOutcome reduce_basic_single_edge_at(WeightedGraph& g, VertexId v);
RuleOutcome reduce_extended_single_edge_at(WeightedGraph& g, VertexId v);
RuleOutcome reduce_twin_at(WeightedGraph& g, VertexId v);
RuleOutcome reduce_two_vertex_neighborhood_removal_at(WeightedGraph& g, VertexId v);
RuleOutcome reduce_heavy_set_at(WeightedGraph& g, VertexId v, const Budgets& budgets = {});

/// Removes v if its weight is zero. The event remembers N(v) so that lifting
/// can put v back whenever it is free, keeping lifted solutions maximal.
RuleOutcome try_exclude_zero_weight(WeightedGraph& g, VertexId v);

} // namespace mwis
