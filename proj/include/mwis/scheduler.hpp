#pragma once

#include "mwis/graph.hpp"
#include "mwis/rule.hpp"
#include "mwis/trace.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mwis {

using Tiers = std::vector<std::vector<Reduction>>;

/// Default cost tiers, cheapest first. Every reduction appears exactly once.
Tiers default_tiers();

struct ReducerConfig {
    /// Enabled operations grouped by tier, cheapest first. Operations not
    /// listed are disabled. Zero-weight cleanup always runs.
    Tiers tiers;
    Budgets budgets;
    std::optional<std::chrono::milliseconds> time_limit;
    /// Only used for instance generation; reduction is deterministic.
    std::uint64_t seed = 0;

    /// Tiers 1-3 plus neighborhood folding and CWIS.
    static ReducerConfig defaults();
    /// Every operation in its default tier.
    static ReducerConfig all_rules();
    /// The default tiers 1..count with all their operations.
    static ReducerConfig first_tiers(std::size_t count);
    /// Exactly the listed operations, each in its default tier.
    static ReducerConfig only(std::span<const Reduction> ops);

    [[nodiscard]] bool is_enabled(Reduction op) const;
    /// Throws std::invalid_argument if an operation is listed twice.
    void validate() const;
};

/// Accepts `default`, `all`, or a comma-separated list of operation names.
ReducerConfig parse_rule_list(std::string_view list);

/// Tier configuration document:
/// {"tiers": [["degree_one", ...], ...], "budgets": {...}, "time_limit_ms": N}
ReducerConfig parse_tier_config(std::string_view json_text);
std::string tier_config_json(const ReducerConfig& config);

struct OpStats {
    std::uint64_t fires = 0;
    std::uint64_t micros = 0;
};

struct Stats {
    std::array<OpStats, kReductionCount> ops{};
    std::array<std::uint64_t, kRuleCount> events{};
    std::size_t original_n = 0;
    std::size_t original_m = 0;
    std::size_t kernel_n = 0;
    std::size_t kernel_m = 0;
    Weight offset = 0;
    double wall_ms = 0;
    bool fixed_point = false;
};

struct KernelResult {
    WeightedGraph kernel;
    ReductionTrace trace;
    Weight offset = 0;
    Stats stats;
    bool fixed_point = false;
};

/// Applies the enabled operations until none fires. On time-limit expiry the
/// current kernel is returned with fixed_point == false.
KernelResult reduce(const WeightedGraph& g, const ReducerConfig& config);

/// In-place variant; events are appended to `trace`. Returns whether a fixed
/// point was reached.
bool reduce_in_place(WeightedGraph& g, const ReducerConfig& config, ReductionTrace& trace, Stats* stats = nullptr);

/// Stats document. Timings are omitted when `with_timings` is false, which
/// makes the output byte-identical across runs.
std::string stats_json(const Stats& stats, bool with_timings = true);

struct VerifyReport {
    bool fixed_point = false;
    bool lift_ok = false;
    bool weight_identity = false;
    Weight kernel_weight = 0;
    Weight offset = 0;
    Weight lifted_weight = 0;
    std::vector<std::string> problems;

    [[nodiscard]] bool ok() const { return fixed_point && lift_ok && weight_identity; }
};

/// Checks that `result.kernel` is a fixed point of `config`, that lifting
/// `kernel_solution` succeeds and that its weight equals kernel weight plus
/// offset. When `original_optimum` is given it is compared as well.
VerifyReport verify_kernel(const WeightedGraph& original,
                           const KernelResult& result,
                           const Solution& kernel_solution,
                           const ReducerConfig& config,
                           std::optional<Weight> original_optimum = std::nullopt);

} // namespace mwis
