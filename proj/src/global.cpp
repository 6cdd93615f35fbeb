#include "mwis/global.hpp"

#include "mwis/solver.hpp"
#include "reduction_support.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mwis {

using detail::EventBuilder;
using detail::fold_into_new_vertex;
using detail::include_vertices;
using detail::second_neighborhood;

namespace {

void require_active(const WeightedGraph& g, VertexId v) { (void)g.weight(v); }

// Component of G - blocked containing `start`, or nullopt once it exceeds `limit` vertices.
std::optional<VertexSet> bounded_component(const WeightedGraph& g,
                                           VertexId start,
                                           std::span<const VertexId> blocked,
                                           std::size_t limit)
{
    std::unordered_set<VertexId> seen{start};
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (set_contains(blocked, w) || seen.count(w)) continue;
            seen.insert(w);
            if (seen.size() > limit) return std::nullopt;
            queue.push_back(w);
        }
    }
    return make_set(VertexSet(seen.begin(), seen.end()));
}

// Small components of G - cut that touch N(cut). Returns nullopt if one of
// them contains every such neighbor, i.e. `cut` separates nothing.
std::optional<std::vector<VertexSet>> small_components(const WeightedGraph& g,
                                                       std::span<const VertexId> cut,
                                                       std::size_t limit)
{
    VertexSet touching = set_difference(g.set_neighborhood(cut), cut);
    std::vector<VertexSet> out;
    VertexSet covered;
    for (VertexId x : touching) {
        if (set_contains(covered, x)) continue;
        auto comp = bounded_component(g, x, cut, limit);
        if (!comp) continue;
        if (is_subset(touching, *comp)) return std::nullopt;
        covered = set_union(covered, set_intersection(*comp, touching));
        out.push_back(std::move(*comp));
    }
    return out;
}

// Hopcroft-Tarjan lowpoints, iteratively; `ignored` acts as if removed.
VertexSet articulation_points_without(const WeightedGraph& g, std::optional<VertexId> ignored)
{
    std::size_t bound = g.id_bound();
    std::vector<std::uint32_t> order(bound, 0), low(bound, 0);
    std::vector<char> is_cut(bound, 0);
    std::uint32_t counter = 0;
    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (VertexId root : g.vertices()) {
        if (order[root] != 0 || root == ignored) continue;
        std::size_t root_children = 0;
        order[root] = low[root] = ++counter;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                VertexId w = nbrs[f.next++];
                if (w == ignored) continue;
                if (order[w] == 0) {
                    order[w] = low[w] = ++counter;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
                continue;
            }
            VertexId v = f.v, parent = f.parent;
            stack.pop_back();
            if (v == root) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (parent != root && low[v] >= order[parent]) is_cut[parent] = 1;
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    VertexSet out;
    for (VertexId v = 0; v < bound; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

} // namespace

// --- Confining and covering sets ---------------------------------------------

ConfiningResult compute_confining_set(const WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    require_active(g, v);
    ConfiningResult result;
    result.set = {v};
    for (std::size_t round = 0;; ++round) {
        const VertexSet& s = result.set;
        VertexSet closed = g.closed_set_neighborhood(s);
        VertexSet boundary = set_difference(closed, s);
        std::optional<VertexId> satellite;
        for (VertexId x : boundary) {
            if (g.weight(x) < g.weight_of(set_intersection(g.neighbors(x), s))) continue;
            VertexSet outside = set_difference(g.neighbors(x), closed);
            if (outside.empty()) {
                result.verdict = Verdict::Reducible;
                return result;
            }
            if (outside.size() == 1 && !satellite) satellite = outside[0];
        }
        if (!satellite) {
            result.verdict = Verdict::Closed;
            return result;
        }
        if (round == budgets.confining_extensions) {
            result.verdict = Verdict::Inconclusive;
            return result;
        }
        result.set = set_union(result.set, std::array{*satellite});
    }
}

RuleOutcome try_unconfined(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    if (compute_confining_set(g, v, budgets).verdict != Verdict::Reducible) return std::nullopt;
    return detail::exclude_vertices(g, Rule::Unconfined, std::array{v});
}

namespace {

RuleOutcome fold_pair(WeightedGraph& g, Rule rule, VertexId u, VertexId v)
{
    VertexSet pair = make_set({u, v});
    VertexSet outer = g.set_neighborhood(pair);
    return fold_into_new_vertex(g, rule, 0, pair, outer, g.weight(u) + g.weight(v), pair, {});
}

} // namespace

RuleOutcome try_simultaneous_confined(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    auto su = compute_confining_set(g, u, budgets);
    if (su.verdict != Verdict::Closed || !set_contains(su.set, v)) return std::nullopt;
    auto sv = compute_confining_set(g, v, budgets);
    if (sv.verdict != Verdict::Closed || !set_contains(sv.set, u)) return std::nullopt;
    return fold_pair(g, Rule::SimultaneousConfined, u, v);
}

RuleOutcome reduce_simultaneous_confined_at(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    auto sv = compute_confining_set(g, v, budgets);
    if (sv.verdict != Verdict::Closed) return std::nullopt;
    for (VertexId u : sv.set) {
        if (u == v) continue;
        auto su = compute_confining_set(g, u, budgets);
        if (su.verdict == Verdict::Closed && set_contains(su.set, v))
            return fold_pair(g, Rule::SimultaneousConfined, u, v);
    }
    return std::nullopt;
}

namespace {

// Whether ω(x) ≥ α(G[rest]); `rest` larger than `cap` counts as no.
bool outweighs(const WeightedGraph& g, Weight wx, const VertexSet& rest, std::size_t cap)
{
    Weight total = 0, heaviest = 0;
    for (VertexId u : rest) {
        Weight w = g.weight(u);
        total += w;
        heaviest = std::max(heaviest, w);
    }
    if (wx >= total) return true;
    if (heaviest > wx || rest.size() > cap) return false;
    return wx >= exact_mwis_weight(g, rest);
}

} // namespace

// Both tests only get easier as C grows, so after adding z only the vertices
// whose neighborhoods meet z are re-examined. The resulting sequence of
// mirrors is the same as rescanning everything each round.
namespace {

CoveringResult covering_set_uncached(const WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    const std::size_t cap = std::min<std::size_t>(budgets.subgraph_vertex_bound, 64);
    CoveringResult result;
    VertexSet& c = result.set;
    c = {v};
    std::set<std::pair<VertexId, VertexId>> mirrors; // (x, y), smallest first

    auto covered = [&](VertexId y) { return outweighs(g, g.weight(y), set_difference(g.neighbors(y), c), cap); };
    auto scan = [&](VertexId x) {
        VertexSet base = set_difference(g.neighbors(x), c);
        const Weight wx = g.weight(x);
        for (VertexId y : set_difference(second_neighborhood(g, x), c)) {
            if (mirrors.count({x, y})) continue;
            bool too_heavy = std::any_of(base.begin(), base.end(),
                                         [&](VertexId u) { return g.weight(u) > wx && !g.has_edge(u, y); });
            if (too_heavy) continue;
            if (outweighs(g, wx, set_difference(base, g.neighbors(y)), cap)) mirrors.insert({x, y});
        }
    };

    if (covered(v)) {
        result.verdict = Verdict::Reducible;
        return result;
    }
    scan(v);
    for (std::size_t round = 0;; ++round) {
        std::erase_if(mirrors, [&](const auto& m) { return set_contains(c, m.second); });
        if (mirrors.empty()) {
            result.verdict = Verdict::Closed;
            return result;
        }
        if (round == budgets.confining_extensions) {
            result.verdict = Verdict::Inconclusive;
            return result;
        }
        VertexId z = mirrors.begin()->second;
        c = set_union(c, std::array{z});
        for (VertexId y : c) {
            if ((y == z || g.has_edge(y, z)) && covered(y)) {
                result.verdict = Verdict::Reducible;
                return result;
            }
        }
        for (VertexId x : c)
            if (x == z || g.has_edge(x, z)) scan(x);
    }
}

// Results for one graph version. Uncovered and simultaneous cover ask for
// the same sets repeatedly while the scheduler scans without firing.
struct CoveringCache {
    std::uint64_t version = 0;
    std::size_t subgraph_bound = 0;
    std::size_t extensions = 0;
    std::unordered_map<VertexId, CoveringResult> sets;
};

} // namespace

CoveringResult compute_covering_set(const WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    require_active(g, v);
    thread_local CoveringCache cache;
    if (cache.version != g.version() || cache.subgraph_bound != budgets.subgraph_vertex_bound
        || cache.extensions != budgets.confining_extensions) {
        cache.sets.clear();
        cache.version = g.version();
        cache.subgraph_bound = budgets.subgraph_vertex_bound;
        cache.extensions = budgets.confining_extensions;
    }
    auto it = cache.sets.find(v);
    if (it == cache.sets.end()) it = cache.sets.emplace(v, covering_set_uncached(g, v, budgets)).first;
    return it->second;
}

RuleOutcome try_uncovered(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    if (compute_covering_set(g, v, budgets).verdict != Verdict::Reducible) return std::nullopt;
    return include_vertices(g, Rule::Uncovered, std::array{v});
}

RuleOutcome try_simultaneous_cover(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    auto cu = compute_covering_set(g, u, budgets);
    if (cu.verdict != Verdict::Closed || !set_contains(cu.set, v)) return std::nullopt;
    auto cv = compute_covering_set(g, v, budgets);
    if (cv.verdict != Verdict::Closed || !set_contains(cv.set, u)) return std::nullopt;
    return fold_pair(g, Rule::SimultaneousCover, u, v);
}

RuleOutcome reduce_simultaneous_cover_at(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    auto cv = compute_covering_set(g, v, budgets);
    if (cv.verdict != Verdict::Closed) return std::nullopt;
    for (VertexId u : cv.set) {
        if (u == v || g.has_edge(u, v)) continue;
        auto cu = compute_covering_set(g, u, budgets);
        if (cu.verdict == Verdict::Closed && set_contains(cu.set, v))
            return fold_pair(g, Rule::SimultaneousCover, u, v);
    }
    return std::nullopt;
}

// --- Cuts --------------------------------------------------------------------

VertexSet articulation_points(const WeightedGraph& g) { return articulation_points_without(g, std::nullopt); }

RuleOutcome try_one_vertex_cut(WeightedGraph& g, VertexId v, const Budgets& budgets)
{
    require_active(g, v);
    auto comps = small_components(g, std::array{v}, budgets.component_bound);
    if (!comps || comps->empty()) return std::nullopt;
    const VertexSet& comp = *std::min_element(comps->begin(), comps->end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    Solution i1 = exact_mwis(g, comp);
    Solution i2 = exact_mwis(g, set_difference(comp, g.neighbors(v)));
    Weight wv = g.weight(v);
    if (wv + i2.weight <= i1.weight) {
        EventBuilder ev(g, Rule::OneVertexCut, i1.weight);
        ev.remove(set_union(comp, std::array{v}));
        ev.add_case({.add = i1.vertices});
        return ev.finish();
    }
    VertexSet outer = set_difference(g.neighbors(v), comp);
    VertexSet folded = set_union(comp, std::array{v});
    VertexSet with_v = set_union(i2.vertices, std::array{v});
    return fold_into_new_vertex(g, Rule::OneVertexCut, i1.weight, folded, outer, wv + i2.weight - i1.weight, with_v,
                                i1.vertices);
}

RuleOutcome try_two_vertex_cut(WeightedGraph& g, VertexId u, VertexId v, const Budgets& budgets)
{
    require_active(g, u);
    require_active(g, v);
    if (u == v) return std::nullopt;
    VertexSet cut = make_set({u, v});
    auto comps = small_components(g, cut, budgets.component_bound);
    if (!comps) return std::nullopt;
    const VertexSet* chosen = nullptr;
    for (const auto& c : *comps) {
        if (c.size() < 4) continue;
        if (!chosen || c.size() < chosen->size() || (c.size() == chosen->size() && c < *chosen)) chosen = &c;
    }
    if (!chosen) return std::nullopt;
    const VertexSet comp = *chosen;

    Solution iu = exact_mwis(g, set_difference(comp, g.neighbors(u)));
    Solution iv = exact_mwis(g, set_difference(comp, g.neighbors(v)));
    Solution iuv = exact_mwis(g, set_difference(comp, set_union(g.neighbors(u), g.neighbors(v))));
    Solution istar = exact_mwis(g, comp);
    if (iu.weight > iv.weight) {
        std::swap(u, v);
        std::swap(iu, iv);
    }

    EventBuilder ev(g, Rule::TwoVertexCut, iuv.weight);
    VertexId xu = ev.create(iu.weight - iuv.weight);
    VertexId xv = ev.create(iv.weight - iuv.weight);
    VertexId xuv = ev.create(istar.weight - iv.weight);
    g.add_edge(v, xu);
    g.add_edge(xu, xv);
    g.add_edge(xv, u);
    g.add_edge(v, xuv);
    g.add_edge(u, xuv);
    ev.remove(comp);
    ev.add_case({.when_in = {v}, .when_out = {u}, .add = iv.vertices});
    ev.add_case({.when_in = {u}, .when_out = {v}, .add = iu.vertices});
    ev.add_case({.when_in = make_set({u, v}), .add = iuv.vertices});
    ev.add_case({.add = istar.vertices});
    return ev.finish();
}

RuleOutcome reduce_one_vertex_cut(WeightedGraph& g, const Budgets& budgets)
{
    for (VertexId v : articulation_points(g))
        if (g.is_active(v))
            if (auto out = try_one_vertex_cut(g, v, budgets)) return out;
    return std::nullopt;
}

RuleOutcome reduce_two_vertex_cut(WeightedGraph& g, const Budgets& budgets)
{
    VertexSet cuts = articulation_points(g);
    VertexSet candidates;
    for (VertexId v : g.vertices()) {
        if (candidates.size() == budgets.two_cut_candidates) break;
        if (g.degree(v) <= 3 || set_contains(cuts, v)) candidates.push_back(v);
    }
    for (VertexId a : candidates) {
        if (!g.is_active(a)) continue;
        for (VertexId b : articulation_points_without(g, a)) {
            if (b == a || !g.is_active(b)) continue;
            if (auto out = try_two_vertex_cut(g, a, b, budgets)) return out;
        }
    }
    return std::nullopt;
}

// --- Critical weight independent set -----------------------------------------

SelectionNetwork build_selection_network(const WeightedGraph& g)
{
    SelectionNetwork net;
    net.vertices = g.vertices();
    std::size_t n = net.vertices.size();
    net.network = FlowNetwork(2 + 2 * n);
    Weight total = 0;
    for (VertexId v : net.vertices) total += g.weight(v);
    const FlowNetwork::Capacity infinite = total + 1;
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = g.weight(net.vertices[i]);
        net.network.add_arc(net.source, 2 + i, w);
        net.network.add_arc(2 + n + i, net.sink, w);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (VertexId u : g.neighbors(net.vertices[i])) {
            auto j = static_cast<std::size_t>(std::lower_bound(net.vertices.begin(), net.vertices.end(), u)
                                              - net.vertices.begin());
            net.network.add_arc(2 + i, 2 + n + j, infinite);
        }
    }
    return net;
}

CriticalSet critical_independent_set(const WeightedGraph& g)
{
    SelectionNetwork net = build_selection_network(g);
    net.network.max_flow(net.source, net.sink);
    auto reachable = net.network.residual_reachable(net.source);
    VertexSet x;
    for (std::size_t i = 0; i < net.vertices.size(); ++i)
        if (reachable[2 + i]) x.push_back(net.vertices[i]);

    CriticalSet out;
    for (VertexId v : x) {
        auto n = g.neighbors(v);
        bool isolated = std::none_of(n.begin(), n.end(), [&](VertexId u) { return set_contains(x, u); });
        if (isolated) out.independent_set.push_back(v);
    }
    out.value = g.weight_of(out.independent_set) - g.weight_of(g.set_neighborhood(out.independent_set));
    return out;
}

Weight critical_weight_value(const WeightedGraph& g) { return critical_independent_set(g).value; }

RuleOutcome try_cwis(WeightedGraph& g)
{
    CriticalSet critical = critical_independent_set(g);
    if (critical.independent_set.empty()) return std::nullopt;
    return include_vertices(g, Rule::Cwis, critical.independent_set);
}

} // namespace mwis
