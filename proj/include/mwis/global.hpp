#pragma once

#include "mwis/graph.hpp"
#include "mwis/max_flow.hpp"
#include "mwis/rule.hpp"
#include "mwis/trace.hpp"

namespace mwis {

enum class Verdict { Reducible, Closed, Inconclusive };

/// Confining set S_v. Reducible means v is unconfined; Closed means S stopped
/// growing with no contradiction.
struct ConfiningResult {
    Verdict verdict = Verdict::Inconclusive;
    VertexSet set;
};

/// Covering set C_v. Reducible means v is uncovered and can be included.
struct CoveringResult {
    Verdict verdict = Verdict::Inconclusive;
    VertexSet set;
};

ConfiningResult compute_confining_set(const WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_unconfined(WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_simultaneous_confined(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets = {});
RuleOutcome reduce_simultaneous_confined_at(WeightedGraph& g, VertexId v, const Budgets& budgets = {});

/// Mirrors of x: y ∉ N[x] sharing a neighbor with x, such that
/// ω(x) ≥ α(G[N(x) \ (C ∪ N(y))]).
CoveringResult compute_covering_set(const WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_uncovered(WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_simultaneous_cover(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets = {});
RuleOutcome reduce_simultaneous_cover_at(WeightedGraph& g, VertexId v, const Budgets& budgets = {});

VertexSet articulation_points(const WeightedGraph& g);
RuleOutcome try_one_vertex_cut(WeightedGraph& g, VertexId v, const Budgets& budgets = {});
RuleOutcome try_two_vertex_cut(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets = {});
/// Whole-graph passes: the first applicable cut in ascending id order.
RuleOutcome reduce_one_vertex_cut(WeightedGraph& g, const Budgets& budgets = {});
RuleOutcome reduce_two_vertex_cut(WeightedGraph& g, const Budgets& budgets = {});

/// Flow network for the critical set: source, sink, a left and a right copy
/// of every active vertex.
struct SelectionNetwork {
    FlowNetwork network;
    std::size_t source = 0;
    std::size_t sink = 1;
    VertexSet vertices; // vertex i has left node 2 + i and right node 2 + n + i
};

SelectionNetwork build_selection_network(const WeightedGraph& g);

struct CriticalSet {
    VertexSet independent_set;
    Weight value = 0; // ω(I) - ω(N(I))
};

CriticalSet critical_independent_set(const WeightedGraph& g);
Weight critical_weight_value(const WeightedGraph& g);
RuleOutcome try_cwis(WeightedGraph& g);

} // namespace mwis
