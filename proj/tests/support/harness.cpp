#include "harness.hpp"

#include "mwis/global.hpp"
#include "mwis/io.hpp"
#include "mwis/reductions.hpp"
#include "mwis/solver.hpp"
#include "mwis/struction.hpp"

#include <sstream>

namespace mwis::testing {

WeightedGraph make_graph(std::vector<Weight> weights, std::vector<std::pair<VertexId, VertexId>> edges)
{
    WeightedGraph g(weights);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Weight oracle_alpha(const WeightedGraph& g) { return brute_force_mwis(g).weight; }

Weight oracle_critical_value(const WeightedGraph& g)
{
    VertexSet all = g.vertices();
    auto sets = enumerate_independent_sets(g, all, std::size_t{1} << 22);
    if (!sets) throw std::invalid_argument("graph too large for the critical-set oracle");
    Weight best = 0;
    for (const auto& s : *sets) best = std::max(best, g.weight_of(s) - g.weight_of(g.set_neighborhood(s)));
    return best;
}

void clean_zero_weights(WeightedGraph& g, ReductionTrace& trace)
{
    for (VertexId v : g.vertices())
        if (g.is_active(v) && g.weight(v) == 0)
            if (auto ev = try_exclude_zero_weight(g, v)) trace.record(std::move(*ev));
}

std::string describe(const WeightedGraph& g)
{
    std::ostringstream out;
    out << "n=" << g.num_vertices() << " weights:";
    for (VertexId v : g.vertices()) out << ' ' << v << ':' << g.weight(v);
    out << " edges:";
    for (VertexId v : g.vertices())
        for (VertexId u : g.neighbors(v))
            if (v < u) out << ' ' << v << '-' << u;
    return out.str();
}

EventCheck check_single_event(const WeightedGraph& g, const Attempt& attempt, std::optional<Weight> alpha)
{
    EventCheck out;
    WeightedGraph after = g;
    RuleOutcome ev = attempt(after);
    if (!ev) {
        if (!(after == g)) out.detail = "graph changed although the rule did not fire";
        out.ok = out.detail.empty();
        return out;
    }
    out.fired = true;
    out.rule = ev->rule;
    out.vertices_before = g.num_vertices();
    ReductionTrace trace;
    std::ostringstream why;
    try {
        trace.record(std::move(*ev));
        out.vertices_after = after.num_vertices();
        clean_zero_weights(after, trace);
        after.check_invariants();

        Weight a0 = alpha ? *alpha : oracle_alpha(g);
        Solution kernel_opt = brute_force_mwis(after);
        if (a0 != kernel_opt.weight + trace.offset()) {
            why << "alpha identity: " << a0 << " != " << kernel_opt.weight << " + " << trace.offset();
        } else {
            Solution lifted = lift(trace, kernel_opt, after, g);
            if (lifted.weight != a0) why << "lifted weight " << lifted.weight << " != " << a0;
        }
    } catch (const std::exception& e) {
        why << "exception: " << e.what();
    }
    out.detail = why.str();
    out.ok = out.detail.empty();
    if (!out.ok) out.detail = std::string(rule_name(out.rule)) + ": " + out.detail + " | " + describe(g);
    return out;
}

CampaignReport run_campaign(const Campaign& c)
{
    CampaignReport report;
    std::mt19937_64 rng(c.seed);
    while (report.graphs < c.max_graphs && report.target_hits < c.needed) {
        WeightedGraph g = c.generator(rng);
        ++report.graphs;
        std::optional<Weight> alpha;
        std::size_t hits_here = 0, checks_here = 0;

        auto run = [&](VertexId u, VertexId v) {
            EventCheck r = check_single_event(
                g, [&](WeightedGraph& h) { return c.attempt(h, u, v); }, alpha);
            if (!r.fired) {
                if (!r.ok) {
                    ++report.failures;
                    report.failure_details.push_back(r.detail);
                }
                return;
            }
            if (!alpha) alpha = oracle_alpha(g);
            ++report.checked;
            ++checks_here;
            if (r.rule == c.target) ++hits_here, ++report.target_hits;
            if (r.vertices_after > r.vertices_before) ++report.grew;
            if (!r.ok) {
                ++report.failures;
                if (report.failure_details.size() < 5) report.failure_details.push_back(r.detail);
            }
        };
        auto enough = [&] { return hits_here >= c.per_graph || checks_here >= 4 * c.per_graph; };

        VertexSet vs = g.vertices();
        if (c.anchor == Anchor::Whole) {
            run(0, 0);
        } else if (c.anchor == Anchor::Vertex) {
            for (VertexId v : vs) {
                if (enough()) break;
                run(v, v);
            }
        } else {
            for (VertexId u : vs) {
                for (VertexId v : vs) {
                    if (u == v || enough()) continue;
                    run(u, v);
                }
            }
        }
    }
    return report;
}

WeightedGraph random_instance(std::mt19937_64& rng, std::size_t nmin, std::size_t nmax, std::vector<double> probs,
                              Weight wmin, Weight wmax)
{
    std::size_t n = std::uniform_int_distribution<std::size_t>(nmin, nmax)(rng);
    double p = probs[std::uniform_int_distribution<std::size_t>(0, probs.size() - 1)(rng)];
    return gen_random(n, p, wmin, wmax, rng());
}

namespace {

std::pair<Weight, Weight> pick_weight_range(std::mt19937_64& rng)
{
    static constexpr std::array<std::pair<Weight, Weight>, 5> ranges{{{1, 10}, {1, 3}, {1, 100}, {1, 1}, {5, 12}}};
    return ranges[std::uniform_int_distribution<std::size_t>(0, ranges.size() - 1)(rng)];
}

} // namespace

Generator mixed_generator(std::size_t nmin, std::size_t nmax)
{
    return [nmin, nmax](std::mt19937_64& rng) {
        auto [lo, hi] = pick_weight_range(rng);
        return random_instance(rng, nmin, nmax, {0.1, 0.2, 0.3, 0.5}, lo, hi);
    };
}

Generator planted_chain_generator(std::vector<std::size_t> chains, bool join_ends)
{
    return [chains, join_ends](std::mt19937_64& rng) {
        std::size_t planted = 0;
        for (auto c : chains) planted += c;
        std::size_t base_max = 14 - planted;
        auto [lo, hi] = pick_weight_range(rng);
        WeightedGraph g = random_instance(rng, 2, std::max<std::size_t>(2, base_max), {0.1, 0.2, 0.3, 0.5}, lo, hi);
        VertexSet vs = g.vertices();
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        VertexId a = vs[pick(rng)], b = a;
        while (b == a) b = vs[pick(rng)];
        std::uniform_int_distribution<Weight> weight(lo, hi);
        for (std::size_t len : chains) {
            VertexId prev = a;
            for (std::size_t i = 0; i < len; ++i) {
                VertexId c = g.add_vertex(weight(rng));
                g.add_edge(prev, c);
                prev = c;
            }
            if (!g.has_edge(prev, b)) g.add_edge(prev, b);
        }
        if (join_ends && !g.has_edge(a, b)) g.add_edge(a, b);
        return g;
    };
}

Campaign campaign_for(Rule rule)
{
    using R = Rule;
    Campaign c;
    c.target = rule;
    c.generator = mixed_generator();
    c.seed = 1000 + static_cast<std::uint64_t>(rule);
    auto vertex = [&](RuleOutcome (*f)(WeightedGraph&, VertexId)) {
        c.anchor = Anchor::Vertex;
        c.attempt = [f](WeightedGraph& g, VertexId v, VertexId) { return f(g, v); };
    };
    auto vertex_b = [&](RuleOutcome (*f)(WeightedGraph&, VertexId, const Budgets&)) {
        c.anchor = Anchor::Vertex;
        c.attempt = [f](WeightedGraph& g, VertexId v, VertexId) { return f(g, v, Budgets{}); };
    };
    auto vertex_s = [&](RuleOutcome (*f)(WeightedGraph&, VertexId, const StructionBudget&)) {
        c.anchor = Anchor::Vertex;
        c.attempt = [f](WeightedGraph& g, VertexId v, VertexId) { return f(g, v, StructionBudget{}); };
    };
    auto pair = [&](RuleOutcome (*f)(WeightedGraph&, VertexId, VertexId)) {
        c.anchor = Anchor::Pair;
        c.attempt = [f](WeightedGraph& g, VertexId u, VertexId v) { return f(g, u, v); };
    };
    auto pair_b = [&](RuleOutcome (*f)(WeightedGraph&, VertexId, VertexId, const Budgets&)) {
        c.anchor = Anchor::Pair;
        c.attempt = [f](WeightedGraph& g, VertexId u, VertexId v) { return f(g, u, v, Budgets{}); };
    };

    switch (rule) {
    case R::DegreeOne: vertex(try_degree_one); break;
    case R::Triangle:
    case R::VShape: vertex(try_degree_two); break;
    case R::Path3:
        vertex(try_path_cycle);
        c.generator = planted_chain_generator({2}, false);
        break;
    case R::Path4:
        vertex(try_path_cycle);
        c.generator = planted_chain_generator({3}, false);
        break;
    case R::Cycle4:
        vertex(try_path_cycle);
        c.generator = planted_chain_generator({2}, true);
        break;
    case R::Cycle5:
        vertex(try_path_cycle);
        c.generator = planted_chain_generator({2, 1}, false);
        break;
    case R::Cycle6:
        vertex(try_path_cycle);
        c.generator = planted_chain_generator({2, 2}, false);
        break;
    case R::HeavyVertex: vertex_b(try_heavy_vertex); break;
    case R::NeighborhoodRemoval: vertex(try_neighborhood_removal); break;
    case R::CliqueNeighborhoodRemoval: vertex(try_clique_neighborhood_removal); break;
    case R::NeighborhoodFolding: vertex(try_neighborhood_folding); break;
    case R::GeneralizedFold: vertex_b(try_generalized_fold); break;
    case R::TwoVertexNeighborhoodRemoval: pair(try_two_vertex_neighborhood_removal); break;
    case R::HeavySet: pair_b(try_heavy_set); break;
    case R::SimplicialVertex:
    case R::SimplicialWeightTransfer: vertex(try_simplicial); break;
    case R::Domination: pair(try_domination); break;
    case R::BasicSingleEdge: pair(try_basic_single_edge); break;
    case R::ExtendedSingleEdge: pair(try_extended_single_edge); break;
    case R::StructionOriginal: vertex_s(try_struction_original); break;
    case R::StructionModified: vertex_s(try_struction_modified); break;
    case R::StructionExtended: vertex_s(try_struction_extended); break;
    case R::StructionExtendedReduced: vertex_s(try_struction_extended_reduced); break;
    case R::Unconfined: vertex_b(try_unconfined); break;
    case R::SimultaneousConfined: pair_b(try_simultaneous_confined); break;
    case R::Uncovered: vertex_b(try_uncovered); break;
    case R::SimultaneousCover: pair_b(try_simultaneous_cover); break;
    case R::OneVertexCut: vertex_b(try_one_vertex_cut); break;
    case R::TwoVertexCut: pair_b(try_two_vertex_cut); break;
    case R::Cwis:
        c.anchor = Anchor::Whole;
        c.attempt = [](WeightedGraph& g, VertexId, VertexId) { return try_cwis(g); };
        break;
    case R::Twin: pair(try_twin); break;
    case R::ExcludeZeroWeight:
        vertex(try_exclude_zero_weight);
        c.generator = [](std::mt19937_64& rng) { return random_instance(rng, 3, 14, {0.1, 0.2, 0.3, 0.5}, 0, 4); };
        break;
    }
    return c;
}

} // namespace mwis::testing
