#include "mwis/struction.hpp"

#include "mwis/solver.hpp"
#include "reduction_support.hpp"

#include <algorithm>

namespace mwis {

using detail::EventBuilder;

namespace {

// Replacement subgraph built before the graph is touched.
struct Plan {
    struct NewVertex {
        Weight weight;
        VertexSet outer; // existing vertices it is adjacent to
    };
    std::vector<NewVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> internal_edges;
    std::vector<std::pair<VertexId, VertexId>> existing_edges;
    VertexSet removed;
    std::vector<std::pair<VertexId, Weight>> reweight;
};

bool fits(const Plan& plan, const StructionBudget& budget)
{
    auto created = static_cast<std::int64_t>(plan.vertices.size());
    auto removed = static_cast<std::int64_t>(plan.removed.size());
    return plan.vertices.size() <= budget.max_created && created - removed <= budget.max_increase;
}

// Applies the plan; returns the builder and the ids given to the planned vertices.
std::pair<EventBuilder, VertexSet> commit(WeightedGraph& g, Rule rule, Weight delta, const Plan& plan)
{
    EventBuilder ev(g, rule, delta);
    VertexSet ids;
    ids.reserve(plan.vertices.size());
    for (const auto& nv : plan.vertices) {
        VertexId id = ev.create(nv.weight);
        ev.connect(id, nv.outer);
        ids.push_back(id);
    }
    for (auto [a, b] : plan.internal_edges) g.add_edge(ids[a], ids[b]);
    for (auto [a, b] : plan.existing_edges) g.add_edge(a, b);
    ev.remove(plan.removed);
    for (auto [u, w] : plan.reweight) g.set_weight(u, w);
    return {std::move(ev), std::move(ids)};
}

struct PairVertex {
    VertexId x;
    VertexId y;
};

// Non-adjacent pairs x < y of N(v), grouped by x (layers in ascending order).
std::vector<PairVertex> non_adjacent_pairs(const WeightedGraph& g, const VertexSet& n)
{
    std::vector<PairVertex> pairs;
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j)
            if (!g.has_edge(n[i], n[j])) pairs.push_back({n[i], n[j]});
    return pairs;
}

bool center_is_lightest(const WeightedGraph& g, VertexId v, const VertexSet& n)
{
    return std::all_of(n.begin(), n.end(), [&](VertexId u) { return g.weight(u) >= g.weight(v); });
}

// Shared part of the original and modified constructions.
std::optional<Plan> pair_plan(const WeightedGraph& g, VertexId v, const StructionBudget& budget, bool modified)
{
    VertexSet n(g.neighbors(v).begin(), g.neighbors(v).end());
    if (n.size() > budget.max_neighborhood || !center_is_lightest(g, v, n)) return std::nullopt;
    auto pairs = non_adjacent_pairs(g, n);

    Plan plan;
    plan.removed = {v};
    if (pairs.size() > budget.max_created
        || static_cast<std::int64_t>(pairs.size()) - 1 > budget.max_increase)
        return std::nullopt;

    Weight wv = g.weight(v);
    for (const auto& p : pairs) {
        VertexSet outer = set_difference(set_union(g.neighbors(p.x), g.neighbors(p.y)), make_set({p.x, p.y, v}));
        if (modified) {
            VertexSet others = n;
            others.erase(std::lower_bound(others.begin(), others.end(), p.x));
            outer = set_union(outer, others);
        }
        plan.vertices.push_back({modified ? g.weight(p.y) : wv, std::move(outer)});
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            bool same_layer = pairs[i].x == pairs[j].x;
            if (!same_layer || g.has_edge(pairs[i].y, pairs[j].y)) plan.internal_edges.emplace_back(i, j);
        }
    }
    if (modified) {
        for (std::size_t i = 0; i < n.size(); ++i)
            for (std::size_t j = i + 1; j < n.size(); ++j)
                if (!g.has_edge(n[i], n[j])) plan.existing_edges.emplace_back(n[i], n[j]);
    }
    for (VertexId u : n) plan.reweight.emplace_back(u, g.weight(u) - wv);
    if (!fits(plan, budget)) return std::nullopt;
    return plan;
}

} // namespace

RuleOutcome try_struction_original(WeightedGraph& g, VertexId v, const StructionBudget& budget)
{
    auto plan = pair_plan(g, v, budget, false);
    if (!plan) return std::nullopt;
    VertexSet n(g.neighbors(v).begin(), g.neighbors(v).end());
    auto [ev, ids] = commit(g, Rule::StructionOriginal, g.weight(v), *plan);
    ev.add_case({.when_out = n, .add = {v}});
    ev.add_case({});
    return ev.finish();
}

RuleOutcome try_struction_modified(WeightedGraph& g, VertexId v, const StructionBudget& budget)
{
    auto plan = pair_plan(g, v, budget, true);
    if (!plan) return std::nullopt;
    VertexSet n(g.neighbors(v).begin(), g.neighbors(v).end());
    auto pairs = non_adjacent_pairs(g, n);
    auto [ev, ids] = commit(g, Rule::StructionModified, g.weight(v), *plan);
    LiftCase expand;
    for (std::size_t i = 0; i < pairs.size(); ++i) expand.expand.emplace_back(ids[i], pairs[i].y);
    ev.add_case({.when_out = n, .add = {v}});
    ev.add_case(std::move(expand));
    return ev.finish();
}

RuleOutcome try_struction_extended(WeightedGraph& g, VertexId v, const StructionBudget& budget)
{
    (void)g.weight(v);
    VertexSet n(g.neighbors(v).begin(), g.neighbors(v).end());
    if (n.size() > budget.max_neighborhood || n.size() > 20) return std::nullopt;
    auto sets = enumerate_independent_sets(g, n, std::size_t{1} << n.size());
    if (!sets) return std::nullopt;
    Weight wv = g.weight(v);

    std::vector<VertexSet> heavy;
    for (auto& c : *sets)
        if (g.weight_of(c) > wv) heavy.push_back(std::move(c));

    Plan plan;
    plan.removed = g.closed_neighborhood(v);
    if (heavy.size() > budget.max_created
        || static_cast<std::int64_t>(heavy.size()) - static_cast<std::int64_t>(plan.removed.size()) > budget.max_increase)
        return std::nullopt;
    for (const auto& c : heavy)
        plan.vertices.push_back({g.weight_of(c) - wv, set_difference(g.set_neighborhood(c), plan.removed)});
    for (std::size_t i = 0; i < heavy.size(); ++i)
        for (std::size_t j = i + 1; j < heavy.size(); ++j) plan.internal_edges.emplace_back(i, j);

    auto [ev, ids] = commit(g, Rule::StructionExtended, wv, plan);
    for (std::size_t i = 0; i < heavy.size(); ++i) ev.add_case({.when_in = {ids[i]}, .add = heavy[i]});
    ev.add_case({.add = {v}});
    return ev.finish();
}

RuleOutcome try_struction_extended_reduced(WeightedGraph& g, VertexId v, const StructionBudget& budget)
{
    (void)g.weight(v);
    VertexSet n(g.neighbors(v).begin(), g.neighbors(v).end());
    if (n.size() > budget.max_neighborhood || n.size() > 20) return std::nullopt;
    auto sets = enumerate_independent_sets(g, n, std::size_t{1} << n.size());
    if (!sets) return std::nullopt;
    Weight wv = g.weight(v);

    // Heavier than v, but dropping any member makes it too light. Since
    // weights are positive this is exactly minimality among heavy sets.
    std::vector<VertexSet> minimal;
    for (auto& c : *sets) {
        Weight wc = g.weight_of(c);
        if (wc <= wv) continue;
        Weight lightest = wc;
        for (VertexId x : c) lightest = std::min(lightest, g.weight(x));
        if (wc - lightest <= wv) minimal.push_back(std::move(c));
    }

    Plan plan;
    plan.removed = g.closed_neighborhood(v);
    struct Layer {
        std::size_t head;
        std::vector<std::pair<std::size_t, VertexId>> members; // planned index, original y
    };
    std::vector<Layer> layers;
    for (const auto& c : minimal) {
        VertexSet nc = g.set_neighborhood(c);
        layers.push_back({plan.vertices.size(), {}});
        plan.vertices.push_back({g.weight_of(c) - wv, set_difference(nc, plan.removed)});
        VertexSet closed_c = set_union(nc, c);
        for (VertexId y : set_difference(n, closed_c)) {
            layers.back().members.emplace_back(plan.vertices.size(), y);
            plan.vertices.push_back({g.weight(y), set_difference(set_union(g.neighbors(y), nc), plan.removed)});
        }
        if (plan.vertices.size() > budget.max_created) return std::nullopt;
    }
    if (!fits(plan, budget)) return std::nullopt;

    for (std::size_t a = 0; a < layers.size(); ++a) {
        const Layer& la = layers[a];
        for (std::size_t i = 0; i < la.members.size(); ++i)
            for (std::size_t j = i + 1; j < la.members.size(); ++j)
                if (g.has_edge(la.members[i].second, la.members[j].second))
                    plan.internal_edges.emplace_back(la.members[i].first, la.members[j].first);
        for (std::size_t b = a + 1; b < layers.size(); ++b) {
            const Layer& lb = layers[b];
            plan.internal_edges.emplace_back(la.head, lb.head);
            for (const auto& m : la.members) plan.internal_edges.emplace_back(m.first, lb.head);
            for (const auto& m : lb.members) plan.internal_edges.emplace_back(la.head, m.first);
            for (const auto& ma : la.members)
                for (const auto& mb : lb.members) plan.internal_edges.emplace_back(ma.first, mb.first);
        }
    }

    auto [ev, ids] = commit(g, Rule::StructionExtendedReduced, wv, plan);
    for (std::size_t a = 0; a < layers.size(); ++a) {
        LiftCase c{.when_in = {ids[layers[a].head]}, .add = minimal[a]};
        for (const auto& m : layers[a].members) c.expand.emplace_back(ids[m.first], m.second);
        ev.add_case(std::move(c));
    }
    ev.add_case({.add = {v}});
    return ev.finish();
}

} // namespace mwis
