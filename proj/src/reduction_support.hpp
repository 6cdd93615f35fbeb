#pragma once

// Helpers shared by the rule implementations. Not part of the public API.

#include "mwis/graph.hpp"
#include "mwis/trace.hpp"

#include <span>
#include <utility>
#include <vector>

namespace mwis::detail {

/// Accumulates the mutation performed by one rule application.
class EventBuilder {
public:
    EventBuilder(WeightedGraph& g, Rule rule, Weight delta) : g_(g) { event_.rule = rule, event_.delta = delta; }

    void remove(VertexId v)
    {
        event_.removed.push_back({v, g_.weight(v)});
        g_.remove_vertex(v);
    }
    void remove(std::span<const VertexId> vertices)
    {
        for (VertexId v : vertices) remove(v);
    }
    VertexId create(Weight weight)
    {
        VertexId id = g_.add_vertex(weight);
        event_.created.push_back(id);
        return id;
    }
    void connect(VertexId v, std::span<const VertexId> others)
    {
        for (VertexId u : others) g_.add_edge(v, u);
    }
    void add_case(LiftCase c) { event_.cases.push_back(std::move(c)); }

    TraceEvent finish() { return std::move(event_); }

private:
    WeightedGraph& g_;
    TraceEvent event_;
};

/// Include every vertex of the independent set `vertices` (removes N[vertices]).
TraceEvent include_vertices(WeightedGraph& g, Rule rule, std::span<const VertexId> vertices);

/// Remove `vertices` without changing the offset.
TraceEvent exclude_vertices(WeightedGraph& g, Rule rule, std::span<const VertexId> vertices);

/// Replace the vertex set `folded` by a new vertex adjacent to `outer` with
/// weight `new_weight`. If the new vertex ends up in the solution, `on_in` is
/// added; otherwise `on_out` is added.
TraceEvent fold_into_new_vertex(WeightedGraph& g,
                                Rule rule,
                                Weight delta,
                                std::span<const VertexId> folded,
                                std::span<const VertexId> outer,
                                Weight new_weight,
                                VertexSet on_in,
                                VertexSet on_out);

/// Distance-two vertices of v: N(N(v)) \ N[v].
VertexSet second_neighborhood(const WeightedGraph& g, VertexId v);

VertexSet to_set(std::span<const VertexId> s);

} // namespace mwis::detail
