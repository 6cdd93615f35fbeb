#include "mwis/reductions.hpp"

#include "mwis/solver.hpp"
#include "reduction_support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

namespace mwis {

using detail::EventBuilder;
using detail::exclude_vertices;
using detail::fold_into_new_vertex;
using detail::include_vertices;
using detail::second_neighborhood;

namespace {

VertexSet neighbors_of(const WeightedGraph& g, VertexId v)
{
    auto n = g.neighbors(v);
    return VertexSet(n.begin(), n.end());
}

void require_active(const WeightedGraph& g, VertexId v) { (void)g.weight(v); }

VertexSet without(VertexSet set, VertexId v)
{
    auto it = std::lower_bound(set.begin(), set.end(), v);
    if (it != set.end() && *it == v) set.erase(it);
    return set;
}

// --- Path and cycle patterns -------------------------------------------------

struct Pattern {
    Rule rule;
    std::size_t length;
    bool cycle;
    unsigned degree_two; // bit i: position i must have degree exactly two
};

constexpr std::array<Pattern, 5> kPatterns{{
    {Rule::Path3, 4, false, 0b0110},
    {Rule::Path4, 5, false, 0b01110},
    {Rule::Cycle4, 4, true, 0b0110},
    {Rule::Cycle5, 5, true, 0b10110},
    {Rule::Cycle6, 6, true, 0b110110},
}};

RuleOutcome apply_path3(WeightedGraph& g, const VertexSet& s)
{
    Weight w0 = g.weight(s[0]), w1 = g.weight(s[1]), w2 = g.weight(s[2]), w3 = g.weight(s[3]);
    if (!(w0 >= w1 && w1 >= w2 && w2 >= w3)) return std::nullopt;
    EventBuilder ev(g, Rule::Path3, w1);
    ev.remove(std::array{s[1], s[2]});
    if (!g.has_edge(s[0], s[3])) g.add_edge(s[0], s[3]);
    g.set_weight(s[0], w0 + w2 - w1);
    ev.add_case({.when_in = {s[0]}, .add = {s[2]}});
    ev.add_case({.add = {s[1]}});
    return ev.finish();
}

RuleOutcome apply_path4(WeightedGraph& g, const VertexSet& s)
{
    Weight w0 = g.weight(s[0]), w1 = g.weight(s[1]), w2 = g.weight(s[2]), w3 = g.weight(s[3]), w4 = g.weight(s[4]);
    if (!(w0 >= w1 && w1 >= w2 && w2 <= w3 && w3 <= w4)) return std::nullopt;
    EventBuilder ev(g, Rule::Path4, w1 + w3 - w2);
    ev.remove(std::array{s[1], s[3]});
    if (!g.has_edge(s[0], s[2])) g.add_edge(s[0], s[2]);
    if (!g.has_edge(s[2], s[4])) g.add_edge(s[2], s[4]);
    g.set_weight(s[0], w0 + w2 - w1);
    g.set_weight(s[4], w4 + w2 - w3);
    ev.add_case({.when_in = {s[2]}, .remove = {s[2]}, .add = make_set({s[1], s[3]})});
    ev.add_case({.when_in = {s[0]}, .when_out = {s[4]}, .add = {s[3]}});
    ev.add_case({.when_in = {s[4]}, .when_out = {s[0]}, .add = {s[1]}});
    ev.add_case({.add = {s[2]}});
    return ev.finish();
}

RuleOutcome apply_cycle4(WeightedGraph& g, const VertexSet& s)
{
    Weight w0 = g.weight(s[0]), w1 = g.weight(s[1]), w2 = g.weight(s[2]);
    if (!(w0 >= w1 && w1 >= w2)) return std::nullopt;
    EventBuilder ev(g, Rule::Cycle4, w1);
    ev.remove(std::array{s[1], s[2]});
    g.set_weight(s[0], w0 + w2 - w1);
    ev.add_case({.when_in = {s[0]}, .add = {s[2]}});
    ev.add_case({.add = {s[1]}});
    return ev.finish();
}

RuleOutcome apply_cycle5(WeightedGraph& g, const VertexSet& s)
{
    if (g.degree(s[0]) < 3 || g.degree(s[3]) < 3) return std::nullopt;
    std::array<Weight, 5> w{};
    for (std::size_t i = 0; i < 5; ++i) w[i] = g.weight(s[i]);
    if (!(w[0] >= w[1] && w[1] >= w[2] && w[2] <= w[3])) return std::nullopt;

    if (w[2] > w[4]) {
        EventBuilder ev(g, Rule::Cycle5, 2 * w[4]);
        ev.remove(s[4]);
        for (std::size_t i = 0; i < 4; ++i) g.set_weight(s[i], w[i] - w[4]);
        ev.add_case({.when_out = make_set({s[0], s[3]}), .add = {s[4]}});
        ev.add_case({});
        return ev.finish();
    }
    EventBuilder ev(g, Rule::Cycle5, w[1] + w[2]);
    ev.remove(std::array{s[1], s[2]});
    g.set_weight(s[0], w[0] - w[1]);
    g.set_weight(s[3], w[3] - w[2]);
    g.set_weight(s[4], w[4] - w[2]);
    ev.add_case({.when_in = make_set({s[0], s[3]})});
    ev.add_case({.when_in = {s[0]}, .add = {s[2]}});
    ev.add_case({.add = {s[1]}});
    return ev.finish();
}

RuleOutcome apply_cycle6(WeightedGraph& g, const VertexSet& s)
{
    std::array<Weight, 6> w{};
    for (std::size_t i = 0; i < 6; ++i) w[i] = g.weight(s[i]);
    if (!(w[0] >= std::max(w[1], w[5]) && w[3] >= std::max(w[2], w[4]) && w[5] >= w[4])) return std::nullopt;

    EventBuilder ev(g, Rule::Cycle6, 0);
    if (w[1] >= w[2]) {
        ev.remove(std::array{s[4], s[5]});
        g.set_weight(s[1], w[1] + w[5]);
        g.set_weight(s[2], w[2] + w[4]);
        ev.add_case({.when_in = {s[1]}, .add = {s[5]}});
        ev.add_case({.when_in = {s[2]}, .add = {s[4]}});
        ev.add_case({});
        return ev.finish();
    }
    ev.remove(s[5]);
    g.add_edge(s[0], s[4]);
    g.set_weight(s[1], w[1] + w[5]);
    g.set_weight(s[2], w[2] + w[4]);
    g.set_weight(s[4], w[5] + w[2] - std::max(w[1] + w[5], w[2] + w[4]));
    ev.add_case({.when_in = make_set({s[0], s[2]}), .add = {s[4]}});
    ev.add_case({.when_in = make_set({s[1], s[3]}), .add = {s[5]}});
    ev.add_case({.when_in = make_set({s[0], s[3]})});
    ev.add_case({.remove = make_set({s[1], s[4]}), .add = make_set({s[2], s[5]})});
    return ev.finish();
}

RuleOutcome apply_pattern(WeightedGraph& g, Rule rule, const VertexSet& s)
{
    switch (rule) {
    case Rule::Path3: return apply_path3(g, s);
    case Rule::Path4: return apply_path4(g, s);
    case Rule::Cycle4: return apply_cycle4(g, s);
    case Rule::Cycle5: return apply_cycle5(g, s);
    case Rule::Cycle6: return apply_cycle6(g, s);
    default: return std::nullopt;
    }
}

// Enumerates embeddings of `p` with v at position `start` and applies the first
// one whose weight conditions hold.
class PatternMatcher {
public:
    PatternMatcher(WeightedGraph& g, const Pattern& p, std::size_t start, VertexId v)
        : g_(g), p_(p), seq_(p.length, 0), filled_(p.length, false)
    {
        seq_[start] = v;
        filled_[start] = true;
        // BFS over pattern positions, recording which filled position each is reached from.
        std::vector<std::size_t> queue{start};
        std::vector<bool> seen(p.length, false);
        seen[start] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t r = queue[head];
            for (std::size_t q : pattern_neighbors(r)) {
                if (seen[q]) continue;
                seen[q] = true;
                order_.push_back({q, r});
                queue.push_back(q);
            }
        }
    }

    RuleOutcome run() { return fill(0); }

private:
    std::vector<std::size_t> pattern_neighbors(std::size_t i) const
    {
        std::vector<std::size_t> out;
        std::size_t n = p_.length;
        if (p_.cycle) {
            out.push_back((i + n - 1) % n);
            out.push_back((i + 1) % n);
        } else {
            if (i > 0) out.push_back(i - 1);
            if (i + 1 < n) out.push_back(i + 1);
        }
        return out;
    }

    bool consistent(std::size_t q, VertexId x) const
    {
        for (std::size_t i = 0; i < p_.length; ++i)
            if (filled_[i] && seq_[i] == x) return false;
        if ((p_.degree_two >> q & 1) && g_.degree(x) != 2) return false;
        for (std::size_t r : pattern_neighbors(q))
            if (filled_[r] && !g_.has_edge(x, seq_[r])) return false;
        return true;
    }

    RuleOutcome fill(std::size_t k)
    {
        if (k == order_.size()) return apply_pattern(g_, p_.rule, seq_);
        auto [q, from] = order_[k];
        VertexSet candidates = neighbors_of(g_, seq_[from]);
        for (VertexId x : candidates) {
            if (!consistent(q, x)) continue;
            seq_[q] = x;
            filled_[q] = true;
            if (auto out = fill(k + 1)) return out;
            filled_[q] = false;
        }
        return std::nullopt;
    }

    WeightedGraph& g_;
    const Pattern& p_;
    VertexSet seq_;
    std::vector<bool> filled_;
    std::vector<std::pair<std::size_t, std::size_t>> order_;
};

} // namespace

RuleOutcome try_degree_one(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.degree(v) != 1) return std::nullopt;
    VertexId u = g.neighbors(v)[0];
    Weight wv = g.weight(v), wu = g.weight(u);
    if (wv >= wu) return include_vertices(g, Rule::DegreeOne, std::array{v});
    VertexSet outer = without(neighbors_of(g, u), v);
    return fold_into_new_vertex(g, Rule::DegreeOne, wv, std::array{u, v}, outer, wu - wv, {u}, {v});
}

RuleOutcome try_degree_two(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.degree(v) != 2) return std::nullopt;
    VertexId x = g.neighbors(v)[0], y = g.neighbors(v)[1];
    if (g.weight(y) < g.weight(x)) std::swap(x, y);
    Weight wv = g.weight(v), wx = g.weight(x), wy = g.weight(y);

    if (g.has_edge(x, y)) {
        if (wv >= wy) return include_vertices(g, Rule::Triangle, std::array{v});
        EventBuilder ev(g, Rule::Triangle, wv);
        if (wv < wx) {
            ev.remove(v);
            g.set_weight(x, wx - wv);
            g.set_weight(y, wy - wv);
            ev.add_case({.when_out = make_set({x, y}), .add = {v}});
        } else {
            ev.remove(std::array{v, x});
            g.set_weight(y, wy - wv);
            ev.add_case({.when_out = {y}, .add = {v}});
        }
        ev.add_case({});
        return ev.finish();
    }

    VertexSet outer = without(set_union(g.neighbors(x), g.neighbors(y)), v);
    if (wv < wx) {
        EventBuilder ev(g, Rule::VShape, wv);
        VertexId folded = ev.create(wv);
        ev.connect(folded, outer);
        ev.remove(v);
        g.set_weight(x, wx - wv);
        g.set_weight(y, wy - wv);
        ev.add_case({.when_in = {x}});
        ev.add_case({.when_in = {y}});
        ev.add_case({.add = {v}});
        return ev.finish();
    }
    if (wv < wy) {
        EventBuilder ev(g, Rule::VShape, wv);
        VertexSet from_y = without(neighbors_of(g, y), v);
        ev.remove(v);
        for (VertexId z : from_y)
            if (!g.has_edge(x, z)) g.add_edge(x, z);
        g.set_weight(y, wy - wv);
        ev.add_case({.when_out = make_set({x, y}), .add = {v}});
        ev.add_case({});
        return ev.finish();
    }
    if (wx + wy <= wv) return include_vertices(g, Rule::VShape, std::array{v});
    return fold_into_new_vertex(g, Rule::VShape, wv, std::array{v, x, y}, outer, wx + wy - wv, make_set({x, y}), {v});
}

RuleOutcome try_path_cycle(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.degree(v) != 2) return std::nullopt;
    for (const Pattern& p : kPatterns) {
        for (std::size_t start = 0; start < p.length; ++start) {
            if (!(p.degree_two >> start & 1)) continue;
            if (auto out = PatternMatcher(g, p, start, v).run()) return out;
        }
    }
    return std::nullopt;
}

RuleOutcome try_neighborhood_removal(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.weight(v) < g.weight_of(g.neighbors(v))) return std::nullopt;
    return include_vertices(g, Rule::NeighborhoodRemoval, std::array{v});
}

RuleOutcome try_heavy_vertex(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    require_active(g, v);
    if (g.degree(v) > budgets.subgraph_vertex_bound) return std::nullopt;
    if (g.weight(v) < exact_mwis_weight(g, g.neighbors(v))) return std::nullopt;
    return include_vertices(g, Rule::HeavyVertex, std::array{v});
}

RuleOutcome try_clique_neighborhood_removal(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.weight(v) < clique_cover_bound(g, g.neighbors(v))) return std::nullopt;
    return include_vertices(g, Rule::CliqueNeighborhoodRemoval, std::array{v});
}

RuleOutcome try_neighborhood_folding(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    VertexSet n = neighbors_of(g, v);
    if (n.empty() || !g.is_independent(n)) return std::nullopt;
    Weight wv = g.weight(v), wn = g.weight_of(n);
    Weight lightest = g.weight(*std::min_element(n.begin(), n.end(), [&](VertexId a, VertexId b) {
        return g.weight(a) < g.weight(b);
    }));
    if (!(wn > wv && wn - lightest < wv)) return std::nullopt;
    VertexSet outer = without(g.set_neighborhood(n), v);
    VertexSet folded = set_union(n, std::array{v});
    return fold_into_new_vertex(g, Rule::NeighborhoodFolding, wv, folded, outer, wn - wv, n, {v});
}

RuleOutcome try_generalized_fold(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    require_active(g, v);
    VertexSet n = neighbors_of(g, v);
    if (n.empty() || n.size() > budgets.generalized_fold_bound || n.size() > 20) return std::nullopt;
    auto sets = enumerate_independent_sets(g, n, std::size_t{1} << n.size());
    if (!sets) return std::nullopt;
    Weight wv = g.weight(v);

    const VertexSet* heavy = nullptr;
    std::size_t heavy_count = 0;
    for (const auto& s : *sets) {
        if (g.weight_of(s) > wv) {
            heavy = &s;
            ++heavy_count;
        }
    }
    if (heavy_count == 1) {
        VertexSet chosen = *heavy;
        VertexSet outer = set_difference(g.set_neighborhood(chosen), g.closed_neighborhood(v));
        VertexSet folded = set_union(n, std::array{v});
        return fold_into_new_vertex(g, Rule::GeneralizedFold, wv, folded, outer, g.weight_of(chosen) - wv, chosen, {v});
    }

    VertexSet excluded;
    for (VertexId u : n) {
        Weight best = 0;
        for (const auto& s : *sets)
            if (set_contains(s, u)) best = std::max(best, g.weight_of(s));
        if (best < wv) excluded.push_back(u);
    }
    if (excluded.empty()) return std::nullopt;
    return exclude_vertices(g, Rule::GeneralizedFold, excluded);
}

RuleOutcome try_two_vertex_neighborhood_removal(WeightedGraph& g, VertexId u, VertexId v)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    Weight wu = g.weight(u), wv = g.weight(v);
    if (wu >= g.weight_of(g.neighbors(u)) || wv >= g.weight_of(g.neighbors(v))) return std::nullopt;
    if (wu + wv < g.weight_of(set_union(g.neighbors(u), g.neighbors(v)))) return std::nullopt;
    return include_vertices(g, Rule::TwoVertexNeighborhoodRemoval, std::array{u, v});
}

RuleOutcome try_heavy_set(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    if (set_intersection(g.neighbors(u), g.neighbors(v)).empty()) return std::nullopt;
    VertexSet n = g.set_neighborhood(make_set({u, v}));
    if (n.size() > budgets.heavy_set_bound || n.size() > 20) return std::nullopt;
    auto sets = enumerate_independent_sets(g, n, std::size_t{1} << n.size());
    if (!sets) return std::nullopt;
    Weight wu = g.weight(u), wv = g.weight(v);
    for (const auto& s : *sets) {
        Weight blocked = 0;
        if (!set_intersection(s, g.neighbors(u)).empty()) blocked += wu;
        if (!set_intersection(s, g.neighbors(v)).empty()) blocked += wv;
        if (blocked < g.weight_of(s)) return std::nullopt;
    }
    return include_vertices(g, Rule::HeavySet, std::array{u, v});
}

RuleOutcome try_simplicial(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    VertexSet n = neighbors_of(g, v);
    if (!g.is_clique(n)) return std::nullopt;
    Weight wv = g.weight(v);
    Weight heaviest = 0;
    for (VertexId u : n) heaviest = std::max(heaviest, g.weight(u));
    if (wv >= heaviest) return include_vertices(g, Rule::SimplicialVertex, std::array{v});

    for (VertexId u : n)
        if (g.weight(u) > wv && g.is_clique(g.neighbors(u))) return std::nullopt;

    EventBuilder ev(g, Rule::SimplicialWeightTransfer, wv);
    VertexSet light{v};
    VertexSet heavy;
    for (VertexId u : n) (g.weight(u) <= wv ? light : heavy).push_back(u);
    ev.remove(make_set(std::move(light)));
    for (VertexId u : heavy) g.set_weight(u, g.weight(u) - wv);
    ev.add_case({.when_out = n, .add = {v}});
    ev.add_case({});
    return ev.finish();
}

RuleOutcome try_domination(WeightedGraph& g, VertexId u, VertexId v)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || !g.has_edge(u, v) || g.weight(v) > g.weight(u)) return std::nullopt;
    if (!is_subset(g.closed_neighborhood(u), g.closed_neighborhood(v))) return std::nullopt;
    return exclude_vertices(g, Rule::Domination, std::array{v});
}

RuleOutcome try_basic_single_edge(WeightedGraph& g, VertexId u, VertexId v)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || !g.has_edge(u, v)) return std::nullopt;
    if (g.weight_of(set_difference(g.neighbors(u), g.neighbors(v))) > g.weight(u)) return std::nullopt;
    return exclude_vertices(g, Rule::BasicSingleEdge, std::array{v});
}

RuleOutcome try_extended_single_edge(WeightedGraph& g, VertexId u, VertexId v)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || !g.has_edge(u, v)) return std::nullopt;
    VertexSet common = set_intersection(g.neighbors(u), g.neighbors(v));
    if (common.empty()) return std::nullopt;
    if (g.weight(v) < g.weight_of(g.neighbors(v)) - g.weight(u)) return std::nullopt;
    return exclude_vertices(g, Rule::ExtendedSingleEdge, common);
}

RuleOutcome try_twin(WeightedGraph& g, VertexId u, VertexId v)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || g.degree(u) == 0) return std::nullopt;
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    if (!std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) return std::nullopt;
    VertexSet n(nu.begin(), nu.end());
    if (!g.is_independent(n)) return std::nullopt;

    VertexSet pair = make_set({u, v});
    Weight wp = g.weight(u) + g.weight(v), wn = g.weight_of(n);
    if (wp >= wn) return include_vertices(g, Rule::Twin, pair);
    Weight lightest = wn;
    for (VertexId x : n) lightest = std::min(lightest, g.weight(x));
    if (wp <= wn - lightest) return std::nullopt;
    VertexSet outer = set_difference(g.set_neighborhood(n), pair);
    VertexSet folded = set_union(n, pair);
    return fold_into_new_vertex(g, Rule::Twin, wp, folded, outer, wn - wp, n, pair);
}

std::vector<std::pair<VertexId, VertexId>> find_twins(const WeightedGraph& g)
{
    std::unordered_map<std::uint64_t, VertexSet> buckets;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 0) continue;
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId u : g.neighbors(v)) {
            h ^= u;
            h *= 1099511628211ull;
        }
        buckets[h].push_back(v);
    }

    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [hash, bucket] : buckets) {
        std::vector<bool> grouped(bucket.size(), false);
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            if (grouped[i]) continue;
            auto ni = g.neighbors(bucket[i]);
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                if (grouped[j]) continue;
                auto nj = g.neighbors(bucket[j]);
                if (std::equal(ni.begin(), ni.end(), nj.begin(), nj.end())) {
                    grouped[j] = true;
                    out.emplace_back(bucket[i], bucket[j]);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RuleOutcome reduce_domination_at(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    for (VertexId u : neighbors_of(g, v))
        if (auto out = try_domination(g, u, v)) return out;
    return std::nullopt;
}

RuleOutcome reduce_basic_single_edge_at(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    for (VertexId u : neighbors_of(g, v))
        if (auto out = try_basic_single_edge(g, u, v)) return out;
    return std::nullopt;
}

RuleOutcome reduce_extended_single_edge_at(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    for (VertexId u : neighbors_of(g, v))
        if (auto out = try_extended_single_edge(g, u, v)) return out;
    return std::nullopt;
}

RuleOutcome reduce_twin_at(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.degree(v) == 0) return std::nullopt;
    auto nv = g.neighbors(v);
    for (VertexId u : neighbors_of(g, nv[0])) {
        if (u == v || g.degree(u) != g.degree(v)) continue;
        auto nu = g.neighbors(u);
        if (!std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) continue;
        if (auto out = try_twin(g, std::min(u, v), std::max(u, v))) return out;
        return std::nullopt;
    }
    return std::nullopt;
}

RuleOutcome reduce_two_vertex_neighborhood_removal_at(WeightedGraph& g, VertexId v)
{
    require_active(g, v);
    if (g.weight(v) >= g.weight_of(g.neighbors(v))) return std::nullopt;
    for (VertexId u : second_neighborhood(g, v))
        if (auto out = try_two_vertex_neighborhood_removal(g, v, u)) return out;
    return std::nullopt;
}

RuleOutcome reduce_heavy_set_at(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    require_active(g, v);
    if (g.degree(v) > budgets.heavy_set_bound) return std::nullopt;
    for (VertexId u : second_neighborhood(g, v)) {
        if (g.degree(u) > budgets.heavy_set_bound) continue;
        if (auto out = try_heavy_set(g, v, u, budgets)) return out;
    }
    return std::nullopt;
}

RuleOutcome try_exclude_zero_weight(WeightedGraph& g, VertexId v)
{
    if (g.weight(v) != 0) return std::nullopt;
    VertexSet n = neighbors_of(g, v);
    EventBuilder ev(g, Rule::ExcludeZeroWeight, 0);
    ev.remove(v);
    ev.add_case({.when_out = std::move(n), .add = {v}});
    ev.add_case({});
    return ev.finish();
}

} // namespace mwis
