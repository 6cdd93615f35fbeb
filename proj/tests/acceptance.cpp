// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is
// the number of failed criteria (capped at 1).

#include "support/harness.hpp"

#include "mwis/global.hpp"
#include "mwis/io.hpp"
#include "mwis/scheduler.hpp"
#include "mwis/solver.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

using namespace mwis;
using namespace mwis::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o)
{
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " -- " << o.detail << std::endl;
    if (!o.pass) ++failures;
}

// Kernel solution by brute force, lifted through the trace.
struct EndToEnd {
    bool ok = false;
    std::string problem;
};

EndToEnd end_to_end(const WeightedGraph& g, const ReducerConfig& config)
{
    EndToEnd out;
    Weight alpha = oracle_alpha(g);
    KernelResult r = reduce(g, config);
    Solution ks = brute_force_mwis(r.kernel);
    if (alpha != ks.weight + r.offset) {
        out.problem = "alpha " + std::to_string(alpha) + " != kernel " + std::to_string(ks.weight) + " + offset "
                      + std::to_string(r.offset) + " | " + describe(g);
        return out;
    }
    try {
        Solution lifted = lift(r.trace, ks, r.kernel, g);
        if (lifted.weight != alpha || !g.is_independent(lifted.vertices)) {
            out.problem = "lifted set has weight " + std::to_string(lifted.weight) + " | " + describe(g);
            return out;
        }
    } catch (const std::exception& e) {
        out.problem = std::string("lift: ") + e.what() + " | " + describe(g);
        return out;
    }
    out.ok = true;
    return out;
}

Outcome criterion_end_to_end()
{
    auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    const std::array<double, 4> probs{0.1, 0.2, 0.3, 0.5};
    ReducerConfig config = ReducerConfig::all_rules();
    std::size_t passed = 0;
    std::string first_problem;
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
        double p = probs[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
        WeightedGraph g = gen_random(n, p, 1, 10, rng());
        EndToEnd r = end_to_end(g, config);
        if (r.ok) ++passed;
        else if (first_problem.empty()) first_problem = r.problem;
    }
    double secs = seconds_since(start);
    std::ostringstream d;
    d << passed << "/1000 instances, " << secs << " s";
    if (!first_problem.empty()) d << "; first failure: " << first_problem;
    return {passed == 1000 && secs < 60.0, d.str()};
}

Outcome criterion_per_rule()
{
    std::size_t ok_rules = 0;
    std::ostringstream d, bad;
    std::size_t total = 0;
    for (std::size_t i = 0; i < kRuleCount; ++i) {
        Rule rule = static_cast<Rule>(i);
        CampaignReport r = run_campaign(campaign_for(rule));
        total += r.target_hits;
        if (r.passed(200)) {
            ++ok_rules;
        } else {
            bad << "\n    " << rule_name(rule) << ": " << r.target_hits << " firing instances, " << r.failures
                << " failures in " << r.checked << " checked events over " << r.graphs << " graphs";
            for (const auto& f : r.failure_details) bad << "\n      " << f;
        }
    }
    d << ok_rules << "/" << kRuleCount << " rule tags with >= 200 sound firing instances (" << total
      << " target events)" << bad.str();
    return {ok_rules == kRuleCount, d.str()};
}

Outcome criterion_cwis()
{
    std::mt19937_64 rng(777);
    std::size_t passed = 0;
    std::string first;
    for (int i = 0; i < 300; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
        double p = std::array<double, 4>{0.1, 0.2, 0.3, 0.5}[i % 4];
        Weight wmax = i % 3 == 0 ? 100 : 10;
        WeightedGraph g = gen_random(n, p, 1, wmax, rng());
        Weight expected = oracle_critical_value(g);
        Weight got = critical_weight_value(g);
        CriticalSet cs = critical_independent_set(g);
        bool consistent = g.is_independent(cs.independent_set)
                          && cs.value == g.weight_of(cs.independent_set)
                                             - g.weight_of(g.set_neighborhood(cs.independent_set));
        if (expected == got && consistent) ++passed;
        else if (first.empty())
            first = "expected " + std::to_string(expected) + " got " + std::to_string(got) + " | " + describe(g);
    }
    return {passed == 300, std::to_string(passed) + "/300 graphs" + (first.empty() ? "" : "; first failure: " + first)};
}

struct RunBytes {
    std::string kernel, trace, stats;
    bool operator==(const RunBytes&) const = default;
};

RunBytes run_bytes(const WeightedGraph& g, const ReducerConfig& config, KernelResult* keep = nullptr)
{
    KernelResult r = reduce(g, config);
    RunBytes b{write_metis(r.kernel), serialize_trace(r.trace), stats_json(r.stats, false)};
    if (keep) *keep = std::move(r);
    return b;
}

Outcome criterion_fixed_point()
{
    std::mt19937_64 rng(4242);
    std::size_t runs = 0, idempotent = 0, deterministic = 0;
    const std::array<ReducerConfig, 3> configs{ReducerConfig::defaults(), ReducerConfig::all_rules(),
                                               ReducerConfig::first_tiers(3)};
    for (int i = 0; i < 150; ++i) {
        std::size_t n = i < 120 ? std::uniform_int_distribution<std::size_t>(1, 40)(rng)
                                : std::uniform_int_distribution<std::size_t>(200, 600)(rng);
        double p = n > 100 ? 3.0 / static_cast<double>(n) : std::array<double, 3>{0.1, 0.2, 0.3}[i % 3];
        WeightedGraph g = gen_random(n, p, 1, 50, rng());
        const ReducerConfig& config = configs[static_cast<std::size_t>(i) % configs.size()];
        KernelResult first;
        RunBytes a = run_bytes(g, config, &first);
        RunBytes b = run_bytes(g, config);
        ++runs;
        if (a == b) ++deterministic;
        KernelResult again = reduce(first.kernel, config);
        if (first.fixed_point && again.trace.empty()) ++idempotent;
    }
    std::ostringstream d;
    d << idempotent << "/" << runs << " kernels re-reduce with zero events, " << deterministic << "/" << runs
      << " runs byte-identical (kernel, trace, stats)";
    return {idempotent == runs && deterministic == runs, d.str()};
}

Outcome criterion_struction_budget()
{
    std::ostringstream d;
    bool ok = true;
    for (Rule rule : {Rule::StructionOriginal, Rule::StructionModified, Rule::StructionExtended,
                      Rule::StructionExtendedReduced}) {
        Campaign c = campaign_for(rule);
        CampaignReport r = run_campaign(c);
        bool rule_ok = r.target_hits >= 200 && r.grew == 0 && r.failures == 0;
        ok = ok && rule_ok;
        d << rule_name(rule) << " " << r.target_hits << " firing, " << r.grew << " grew; ";
    }
    return {ok, d.str()};
}

Outcome criterion_scale()
{
    const std::size_t n = 100000;
    WeightedGraph g = gen_random(n, 4.0 / static_cast<double>(n - 1), 1, 100, 99);
    ReducerConfig config = ReducerConfig::first_tiers(3);
    auto start = Clock::now();
    KernelResult r = reduce(g, config);
    double secs = seconds_since(start);
    RunBytes again = run_bytes(g, config);
    bool deterministic = again == RunBytes{write_metis(r.kernel), serialize_trace(r.trace), stats_json(r.stats, false)};

    // Offset equals the sum of deltas and every vertex is accounted for exactly once.
    Weight sum = 0;
    std::vector<int> seen(r.kernel.id_bound(), 0);
    for (const auto& ev : r.trace.events()) {
        sum += ev.delta;
        for (const auto& rv : ev.removed) ++seen[rv.id];
    }
    for (VertexId v : r.kernel.vertices()) ++seen[v];
    bool accounted = std::all_of(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(n), [](int c) { return c == 1; });
    bool offset_ok = sum == r.offset && r.offset == r.trace.offset();

    // Spot-lift of include events: an unconditional single-case event that
    // only adds vertices must add removed vertices whose recorded weights sum
    // to its delta, and original ones must be independent in the input.
    std::vector<std::size_t> includes;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& ev = r.trace.events()[i];
        if (ev.cases.size() == 1 && ev.created.empty() && ev.cases[0].when_in.empty()
            && ev.cases[0].when_out.empty() && ev.cases[0].remove.empty() && !ev.cases[0].add.empty())
            includes.push_back(i);
    }
    std::mt19937_64 rng(5);
    std::shuffle(includes.begin(), includes.end(), rng);
    includes.resize(std::min<std::size_t>(100, includes.size()));
    std::size_t spot_ok = 0;
    for (std::size_t i : includes) {
        const auto& ev = r.trace.events()[i];
        VertexSet sol;
        lift_event(ev, sol);
        Weight w = 0;
        bool members = true;
        for (VertexId v : sol) {
            auto it = std::find_if(ev.removed.begin(), ev.removed.end(), [v](const RemovedVertex& rv) { return rv.id == v; });
            if (it == ev.removed.end()) members = false;
            else w += it->weight;
        }
        VertexSet original_part;
        for (VertexId v : sol)
            if (v < n) original_part.push_back(v);
        if (members && w == ev.delta && sol == ev.cases[0].add && g.is_independent(original_part)) ++spot_ok;
    }

    std::ostringstream d;
    d << "n=" << n << " m=" << g.num_edges() << " kernel n=" << r.stats.kernel_n << " m=" << r.stats.kernel_m
      << ", offset " << r.offset << ", " << secs << " s, fixed point " << (r.fixed_point ? "yes" : "no")
      << ", deterministic " << (deterministic ? "yes" : "no") << ", accounting " << (accounted && offset_ok ? "ok" : "BROKEN")
      << ", spot-lift " << spot_ok << "/" << includes.size();
    bool pass = secs < 30.0 && r.fixed_point && deterministic && accounted && offset_ok && includes.size() == 100
                && spot_ok == includes.size();
    return {pass, d.str()};
}

Outcome criterion_formats()
{
    std::mt19937_64 rng(31337);
    std::size_t metis_ok = 0, edge_ok = 0, trace_ok = 0;
    for (int i = 0; i < 100; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(0, 60)(rng);
        double p = std::array<double, 4>{0.0, 0.1, 0.3, 1.0}[static_cast<std::size_t>(i) % 4];
        WeightedGraph g = gen_random(n, p, 0, 1000, rng());
        try {
            if (parse_metis(write_metis(g)) == g) ++metis_ok;
            LabeledGraph lg = parse_edge_list(write_edge_list(g));
            if (lg.graph == g) ++edge_ok;
        } catch (const std::exception&) {
        }
    }
    ReducerConfig config = ReducerConfig::all_rules();
    for (int i = 0; i < 100; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
        WeightedGraph g = gen_random(n, std::array<double, 4>{0.1, 0.2, 0.3, 0.5}[i % 4], 1, 10, rng());
        KernelResult r = reduce(g, config);
        Solution ks = brute_force_mwis(r.kernel);
        try {
            ReductionTrace parsed = parse_trace(serialize_trace(r.trace));
            Solution a = lift(r.trace, ks, r.kernel, g);
            Solution b = lift(parsed, ks, r.kernel, g);
            if (parsed == r.trace && a == b) ++trace_ok;
        } catch (const std::exception&) {
        }
    }
    std::ostringstream d;
    d << "METIS " << metis_ok << "/100, edge list " << edge_ok << "/100, trace replay " << trace_ok << "/100";
    return {metis_ok == 100 && edge_ok == 100 && trace_ok == 100, d.str()};
}

} // namespace

int main()
{
    report(1, "end-to-end oracle equivalence", criterion_end_to_end());
    report(2, "per-rule soundness", criterion_per_rule());
    report(3, "critical weight value", criterion_cwis());
    report(4, "fixed point and determinism", criterion_fixed_point());
    report(5, "struction budget", criterion_struction_budget());
    report(6, "scale smoke test", criterion_scale());
    report(7, "format fidelity", criterion_formats());
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
