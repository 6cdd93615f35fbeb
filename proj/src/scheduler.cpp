#include "mwis/scheduler.hpp"

#include "mwis/global.hpp"
#include "mwis/reductions.hpp"
#include "mwis/struction.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace mwis {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

Tiers default_tiers()
{
    using R = Reduction;
    return {
        {R::DegreeOne, R::DegreeTwo, R::PathCycle},
        {R::NeighborhoodRemoval, R::Domination, R::BasicSingleEdge, R::ExtendedSingleEdge, R::Simplicial, R::Twin},
        {R::CliqueNeighborhoodRemoval, R::Unconfined, R::Uncovered, R::SimultaneousConfined, R::SimultaneousCover},
        {R::HeavyVertex, R::NeighborhoodFolding, R::GeneralizedFold, R::HeavySet, R::TwoVertexNeighborhoodRemoval,
         R::StructionExtendedReduced, R::StructionExtended, R::StructionModified, R::StructionOriginal},
        {R::Cwis, R::OneVertexCut, R::TwoVertexCut},
    };
}

namespace {

Tiers filter_tiers(const std::function<bool(Reduction, std::size_t)>& keep)
{
    Tiers out;
    Tiers all = default_tiers();
    for (std::size_t t = 0; t < all.size(); ++t) {
        std::vector<Reduction> tier;
        for (Reduction r : all[t])
            if (keep(r, t)) tier.push_back(r);
        if (!tier.empty()) out.push_back(std::move(tier));
    }
    return out;
}

} // namespace

ReducerConfig ReducerConfig::defaults()
{
    ReducerConfig c;
    c.tiers = filter_tiers([](Reduction r, std::size_t t) {
        if (r == Reduction::PathCycle) return false;
        return t < 3 || r == Reduction::NeighborhoodFolding || r == Reduction::Cwis;
    });
    return c;
}

ReducerConfig ReducerConfig::all_rules()
{
    ReducerConfig c;
    c.tiers = default_tiers();
    return c;
}

ReducerConfig ReducerConfig::first_tiers(std::size_t count)
{
    ReducerConfig c;
    c.tiers = filter_tiers([count](Reduction, std::size_t t) { return t < count; });
    return c;
}

ReducerConfig ReducerConfig::only(std::span<const Reduction> ops)
{
    ReducerConfig c;
    c.tiers = filter_tiers([ops](Reduction r, std::size_t) { return std::find(ops.begin(), ops.end(), r) != ops.end(); });
    return c;
}

bool ReducerConfig::is_enabled(Reduction op) const
{
    return std::any_of(tiers.begin(), tiers.end(),
                       [op](const auto& tier) { return std::find(tier.begin(), tier.end(), op) != tier.end(); });
}

void ReducerConfig::validate() const
{
    std::array<bool, kReductionCount> seen{};
    for (const auto& tier : tiers) {
        for (Reduction r : tier) {
            auto i = static_cast<std::size_t>(r);
            if (seen[i]) throw std::invalid_argument("operation listed twice: " + std::string(reduction_name(r)));
            seen[i] = true;
        }
    }
    if (budgets.struction.max_increase < 0) throw std::invalid_argument("struction max_increase must be >= 0");
}

ReducerConfig parse_rule_list(std::string_view list)
{
    if (list == "default") return ReducerConfig::defaults();
    if (list == "all") return ReducerConfig::all_rules();
    std::vector<Reduction> ops;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t end = std::min(list.find(',', start), list.size());
        std::string_view name = list.substr(start, end - start);
        while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
        while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
        if (!name.empty()) {
            auto op = reduction_from_name(name);
            if (!op) throw std::invalid_argument("unknown rule: " + std::string(name));
            ops.push_back(*op);
        }
        start = end + 1;
    }
    return ReducerConfig::only(ops);
}

namespace {

std::size_t read_size(const json& doc, const char* key, std::size_t fallback)
{
    if (!doc.contains(key)) return fallback;
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw std::invalid_argument(std::string("budget '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

} // namespace

ReducerConfig parse_tier_config(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("tier config: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("tier config must be a JSON object");

    ReducerConfig c = ReducerConfig::defaults();
    if (doc.contains("tiers")) {
        c.tiers.clear();
        for (const json& tier : doc.at("tiers")) {
            std::vector<Reduction> ops;
            for (const json& name : tier) {
                auto op = name.is_string() ? reduction_from_name(name.get<std::string>()) : std::nullopt;
                if (!op) throw std::invalid_argument("tier config: unknown rule " + name.dump());
                ops.push_back(*op);
            }
            c.tiers.push_back(std::move(ops));
        }
    }
    if (doc.contains("budgets")) {
        const json& b = doc.at("budgets");
        Budgets& out = c.budgets;
        out.subgraph_vertex_bound = read_size(b, "subgraph_vertex_bound", out.subgraph_vertex_bound);
        out.generalized_fold_bound = read_size(b, "generalized_fold_bound", out.generalized_fold_bound);
        out.heavy_set_bound = read_size(b, "heavy_set_bound", out.heavy_set_bound);
        out.component_bound = read_size(b, "component_bound", out.component_bound);
        out.confining_extensions = read_size(b, "confining_extensions", out.confining_extensions);
        out.two_cut_candidates = read_size(b, "two_cut_candidates", out.two_cut_candidates);
        if (b.contains("struction")) {
            const json& s = b.at("struction");
            out.struction.max_neighborhood = read_size(s, "max_neighborhood", out.struction.max_neighborhood);
            out.struction.max_created = read_size(s, "max_created", out.struction.max_created);
            out.struction.max_increase = static_cast<std::int64_t>(
                read_size(s, "max_increase", static_cast<std::size_t>(out.struction.max_increase)));
        }
    }
    if (doc.contains("time_limit_ms"))
        c.time_limit = std::chrono::milliseconds(read_size(doc, "time_limit_ms", 0));
    c.validate();
    return c;
}

std::string tier_config_json(const ReducerConfig& config)
{
    json tiers = json::array();
    for (const auto& tier : config.tiers) {
        json names = json::array();
        for (Reduction r : tier) names.push_back(std::string(reduction_name(r)));
        tiers.push_back(std::move(names));
    }
    const Budgets& b = config.budgets;
    json doc = {
        {"tiers", std::move(tiers)},
        {"budgets",
         {{"subgraph_vertex_bound", b.subgraph_vertex_bound},
          {"generalized_fold_bound", b.generalized_fold_bound},
          {"heavy_set_bound", b.heavy_set_bound},
          {"component_bound", b.component_bound},
          {"confining_extensions", b.confining_extensions},
          {"two_cut_candidates", b.two_cut_candidates},
          {"struction",
           {{"max_neighborhood", b.struction.max_neighborhood},
            {"max_increase", b.struction.max_increase},
            {"max_created", b.struction.max_created}}}}},
    };
    if (config.time_limit) doc["time_limit_ms"] = config.time_limit->count();
    return doc.dump(2);
}

// --- Reduction loop ------------------------------------------------------------

namespace {

RuleOutcome apply_anchored(WeightedGraph& g, Reduction op, VertexId v, const Budgets& b)
{
    switch (op) {
    case Reduction::DegreeOne: return try_degree_one(g, v);
    case Reduction::DegreeTwo: return try_degree_two(g, v);
    case Reduction::PathCycle: return try_path_cycle(g, v);
    case Reduction::NeighborhoodRemoval: return try_neighborhood_removal(g, v);
    case Reduction::Domination: return reduce_domination_at(g, v);
    case Reduction::BasicSingleEdge: return reduce_basic_single_edge_at(g, v);
    case Reduction::ExtendedSingleEdge: return reduce_extended_single_edge_at(g, v);
    case Reduction::Simplicial: return try_simplicial(g, v);
    case Reduction::Twin: return reduce_twin_at(g, v);
    case Reduction::CliqueNeighborhoodRemoval: return try_clique_neighborhood_removal(g, v);
    case Reduction::Unconfined: return try_unconfined(g, v, b);
    case Reduction::Uncovered: return try_uncovered(g, v, b);
    case Reduction::SimultaneousConfined: return reduce_simultaneous_confined_at(g, v, b);
    case Reduction::SimultaneousCover: return reduce_simultaneous_cover_at(g, v, b);
    case Reduction::HeavyVertex: return try_heavy_vertex(g, v, b);
    case Reduction::NeighborhoodFolding: return try_neighborhood_folding(g, v);
    case Reduction::GeneralizedFold: return try_generalized_fold(g, v, b);
    case Reduction::HeavySet: return reduce_heavy_set_at(g, v, b);
    case Reduction::TwoVertexNeighborhoodRemoval: return reduce_two_vertex_neighborhood_removal_at(g, v);
    case Reduction::StructionExtendedReduced: return try_struction_extended_reduced(g, v, b.struction);
    case Reduction::StructionExtended: return try_struction_extended(g, v, b.struction);
    case Reduction::StructionModified: return try_struction_modified(g, v, b.struction);
    case Reduction::StructionOriginal: return try_struction_original(g, v, b.struction);
    case Reduction::Cwis:
    case Reduction::OneVertexCut:
    case Reduction::TwoVertexCut: break;
    }
    throw std::logic_error("not an anchored operation");
}

RuleOutcome apply_global(WeightedGraph& g, Reduction op, const Budgets& b)
{
    switch (op) {
    case Reduction::Cwis: return try_cwis(g);
    case Reduction::OneVertexCut: return reduce_one_vertex_cut(g, b);
    case Reduction::TwoVertexCut: return reduce_two_vertex_cut(g, b);
    default: throw std::logic_error("not a global operation");
    }
}

class Reducer {
public:
    Reducer(WeightedGraph& g, const ReducerConfig& config, ReductionTrace& trace)
        : g_(g), config_(config), trace_(trace), queues_(config.tiers.size()),
          queued_(config.tiers.size())
    {
        config.validate();
        for (const auto& tier : config.tiers) {
            bool has_global = std::any_of(tier.begin(), tier.end(), is_global);
            tier_has_global_.push_back(has_global);
        }
        if (config.time_limit) deadline_ = Clock::now() + *config.time_limit;
    }

    bool run()
    {
        g_.set_journaling(true);
        (void)g_.drain_journal();
        for (VertexId v : g_.vertices()) clean_zero(v);
        flush_journal();
        enqueue_everything();
        bool swept_clean = false;
        bool fixed = false;

        while (true) {
            if (deadline_ && Clock::now() >= *deadline_) break;
            std::optional<std::size_t> tier = cheapest_pending_tier();
            if (!tier) {
                if (swept_clean) {
                    fixed = true;
                    break;
                }
                enqueue_everything();
                swept_clean = true;
                continue;
            }
            if (step(*tier)) swept_clean = false;
        }
        g_.set_journaling(false);
        (void)g_.drain_journal();
        return fixed;
    }

private:
    std::optional<std::size_t> cheapest_pending_tier() const
    {
        for (std::size_t t = 0; t < queues_.size(); ++t)
            if (!queues_[t].empty() || (tier_has_global_[t] && global_dirty_)) return t;
        return std::nullopt;
    }

    void enqueue(VertexId v)
    {
        for (std::size_t t = 0; t < queues_.size(); ++t) {
            if (queued_[t].size() <= v) queued_[t].resize(std::max<std::size_t>(g_.id_bound(), v + 1), 0);
            if (queued_[t][v]) continue;
            queued_[t][v] = 1;
            queues_[t].push(v);
        }
    }

    void enqueue_everything()
    {
        for (VertexId v : g_.vertices()) enqueue(v);
        global_dirty_ = true;
    }

    // Returns whether an event happened.
    bool step(std::size_t t)
    {
        const auto& ops = config_.tiers[t];
        if (!queues_[t].empty()) {
            VertexId v = queues_[t].top();
            queues_[t].pop();
            queued_[t][v] = 0;
            if (!g_.is_active(v)) return false;
            for (Reduction op : ops) {
                if (is_global(op)) continue;
                if (timed(op, [&] { return apply_anchored(g_, op, v, config_.budgets); })) return true;
            }
            return false;
        }
        for (Reduction op : ops) {
            if (!is_global(op)) continue;
            if (timed(op, [&] { return apply_global(g_, op, config_.budgets); })) return true;
        }
        global_dirty_ = false;
        return false;
    }

    template <class F>
    bool timed(Reduction op, F&& attempt)
    {
        auto start = Clock::now();
        RuleOutcome out = attempt();
        auto& s = op_stats_[static_cast<std::size_t>(op)];
        s.micros += static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count());
        if (!out) return false;
        ++s.fires;
        record(std::move(*out));
        flush_journal();
        return true;
    }

    void record(TraceEvent ev)
    {
        ++events_[static_cast<std::size_t>(ev.rule)];
        trace_.record(std::move(ev));
    }

    void clean_zero(VertexId v)
    {
        if (!g_.is_active(v) || g_.weight(v) != 0) return;
        if (auto ev = try_exclude_zero_weight(g_, v)) record(std::move(*ev));
    }

    // Removes vertices that dropped to weight zero, then marks D ∪ N(D) dirty.
    void flush_journal()
    {
        VertexSet touched;
        while (true) {
            VertexSet batch = g_.drain_journal();
            if (batch.empty()) break;
            touched = set_union(touched, batch);
            for (VertexId v : batch) clean_zero(v);
        }
        for (VertexId v : touched) {
            if (!g_.is_active(v)) continue;
            enqueue(v);
            for (VertexId u : g_.neighbors(v)) enqueue(u);
        }
        global_dirty_ = true;
    }

public:
    std::array<OpStats, kReductionCount> op_stats_{};
    std::array<std::uint64_t, kRuleCount> events_{};

private:
    WeightedGraph& g_;
    const ReducerConfig& config_;
    ReductionTrace& trace_;
    using MinHeap = std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
    std::vector<MinHeap> queues_;
    std::vector<std::vector<char>> queued_;
    std::vector<bool> tier_has_global_;
    bool global_dirty_ = true;
    std::optional<Clock::time_point> deadline_;
};

} // namespace

bool reduce_in_place(WeightedGraph& g, const ReducerConfig& config, ReductionTrace& trace, Stats* stats)
{
    auto start = Clock::now();
    std::size_t n0 = g.num_vertices(), m0 = g.num_edges();
    Weight offset0 = trace.offset();
    Reducer reducer(g, config, trace);
    bool fixed = reducer.run();
    if (stats) {
        stats->ops = reducer.op_stats_;
        stats->events = reducer.events_;
        stats->original_n = n0;
        stats->original_m = m0;
        stats->kernel_n = g.num_vertices();
        stats->kernel_m = g.num_edges();
        stats->offset = trace.offset() - offset0;
        stats->wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        stats->fixed_point = fixed;
    }
    return fixed;
}

KernelResult reduce(const WeightedGraph& g, const ReducerConfig& config)
{
    KernelResult result;
    result.kernel = g;
    result.fixed_point = reduce_in_place(result.kernel, config, result.trace, &result.stats);
    result.offset = result.trace.offset();
    return result;
}

std::string stats_json(const Stats& stats, bool with_timings)
{
    json rules = json::object();
    for (std::size_t i = 0; i < kReductionCount; ++i) {
        json entry = {{"fires", stats.ops[i].fires}};
        if (with_timings) entry["micros"] = stats.ops[i].micros;
        rules[std::string(reduction_name(static_cast<Reduction>(i)))] = std::move(entry);
    }
    json events = json::object();
    for (std::size_t i = 0; i < kRuleCount; ++i)
        events[std::string(rule_name(static_cast<Rule>(i)))] = stats.events[i];
    json doc = {
        {"rules", std::move(rules)},
        {"events", std::move(events)},
        {"original", {{"n", stats.original_n}, {"m", stats.original_m}}},
        {"kernel", {{"n", stats.kernel_n}, {"m", stats.kernel_m}}},
        {"offset", stats.offset},
        {"fixed_point", stats.fixed_point},
    };
    if (with_timings) doc["wall_ms"] = stats.wall_ms;
    return doc.dump(2) + "\n";
}

VerifyReport verify_kernel(const WeightedGraph& original,
                           const KernelResult& result,
                           const Solution& kernel_solution,
                           const ReducerConfig& config,
                           std::optional<Weight> original_optimum)
{
    VerifyReport report;
    report.offset = result.offset;
    report.kernel_weight = kernel_solution.weight;

    ReducerConfig again = config;
    again.time_limit.reset();
    WeightedGraph copy = result.kernel;
    ReductionTrace extra;
    reduce_in_place(copy, again, extra);
    report.fixed_point = extra.empty();
    if (!report.fixed_point)
        report.problems.push_back("kernel is not a fixed point: " + std::to_string(extra.size()) + " more events");

    if (result.offset != result.trace.offset())
        report.problems.push_back("offset " + std::to_string(result.offset) + " differs from trace offset "
                                  + std::to_string(result.trace.offset()));

    try {
        Solution lifted = lift(result.trace, kernel_solution, result.kernel, original);
        report.lift_ok = true;
        report.lifted_weight = lifted.weight;
    } catch (const std::exception& e) {
        report.problems.push_back(std::string("lift failed: ") + e.what());
    }

    report.weight_identity = report.lift_ok && result.offset == result.trace.offset()
                             && report.lifted_weight == kernel_solution.weight + result.offset;
    if (report.lift_ok && !report.weight_identity)
        report.problems.push_back("lifted weight " + std::to_string(report.lifted_weight) + " != kernel weight "
                                  + std::to_string(kernel_solution.weight) + " + offset "
                                  + std::to_string(result.offset));
    if (original_optimum && report.lift_ok && report.lifted_weight != *original_optimum) {
        report.weight_identity = false;
        report.problems.push_back("lifted weight " + std::to_string(report.lifted_weight) + " != optimum "
                                  + std::to_string(*original_optimum));
    }
    return report;
}

} // namespace mwis
