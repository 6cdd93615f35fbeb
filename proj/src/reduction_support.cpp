#include "reduction_support.hpp"

namespace mwis::detail {

TraceEvent include_vertices(WeightedGraph& g, Rule rule, std::span<const VertexId> vertices)
{
    VertexSet included = to_set(vertices);
    VertexSet closed = g.closed_set_neighborhood(included);
    EventBuilder ev(g, rule, g.weight_of(included));
    ev.remove(closed);
    ev.add_case({.add = std::move(included)});
    return ev.finish();
}

TraceEvent exclude_vertices(WeightedGraph& g, Rule rule, std::span<const VertexId> vertices)
{
    EventBuilder ev(g, rule, 0);
    ev.remove(to_set(vertices));
    return ev.finish();
}

TraceEvent fold_into_new_vertex(WeightedGraph& g,
                                Rule rule,
                                Weight delta,
                                std::span<const VertexId> folded,
                                std::span<const VertexId> outer,
                                Weight new_weight,
                                VertexSet on_in,
                                VertexSet on_out)
{
    EventBuilder ev(g, rule, delta);
    VertexId created = ev.create(new_weight);
    ev.connect(created, outer);
    ev.remove(to_set(folded));
    ev.add_case({.when_in = {created}, .add = std::move(on_in)});
    ev.add_case({.add = std::move(on_out)});
    return ev.finish();
}

VertexSet second_neighborhood(const WeightedGraph& g, VertexId v)
{
    VertexSet nv(g.neighbors(v).begin(), g.neighbors(v).end());
    VertexSet two = g.set_neighborhood(nv);
    return set_difference(two, g.closed_neighborhood(v));
}

VertexSet to_set(std::span<const VertexId> s) { return make_set(VertexSet(s.begin(), s.end())); }

} // namespace mwis::detail
