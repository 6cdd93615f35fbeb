#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mwis {

/// Tag identifying the reduction that produced a trace event.
enum class Rule : std::uint8_t {
    DegreeOne,
    Triangle,
    VShape,
    Path3,
    Path4,
    Cycle4,
    Cycle5,
    Cycle6,
    HeavyVertex,
    NeighborhoodRemoval,
    CliqueNeighborhoodRemoval,
    NeighborhoodFolding,
    GeneralizedFold,
    TwoVertexNeighborhoodRemoval,
    HeavySet,
    SimplicialVertex,
    SimplicialWeightTransfer,
    Domination,
    BasicSingleEdge,
    ExtendedSingleEdge,
    StructionOriginal,
    StructionModified,
    StructionExtended,
    StructionExtendedReduced,
    Unconfined,
    SimultaneousConfined,
    Uncovered,
    SimultaneousCover,
    OneVertexCut,
    TwoVertexCut,
    Cwis,
    Twin,
    ExcludeZeroWeight,
};

inline constexpr std::size_t kRuleCount = static_cast<std::size_t>(Rule::ExcludeZeroWeight) + 1;

std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

/// A schedulable reduction operation. One operation may emit events with
/// several rule tags (e.g. DegreeTwo emits Triangle or VShape).
enum class Reduction : std::uint8_t {
    DegreeOne,
    DegreeTwo,
    PathCycle,
    NeighborhoodRemoval,
    Domination,
    BasicSingleEdge,
    ExtendedSingleEdge,
    Simplicial,
    Twin,
    CliqueNeighborhoodRemoval,
    Unconfined,
    Uncovered,
    SimultaneousConfined,
    SimultaneousCover,
    HeavyVertex,
    NeighborhoodFolding,
    GeneralizedFold,
    HeavySet,
    TwoVertexNeighborhoodRemoval,
    StructionExtendedReduced,
    StructionExtended,
    StructionModified,
    StructionOriginal,
    Cwis,
    OneVertexCut,
    TwoVertexCut,
};

inline constexpr std::size_t kReductionCount = static_cast<std::size_t>(Reduction::TwoVertexCut) + 1;

std::string_view reduction_name(Reduction reduction);
std::optional<Reduction> reduction_from_name(std::string_view name);

/// Whole-graph operations that are not anchored at a vertex.
constexpr bool is_global(Reduction r)
{
    return r == Reduction::Cwis || r == Reduction::OneVertexCut || r == Reduction::TwoVertexCut;
}

struct StructionBudget {
    std::size_t max_neighborhood = 15;
    /// Largest allowed net growth in vertex count; 0 keeps kernels monotone.
    std::int64_t max_increase = 0;
    std::size_t max_created = 256;
};

/// Size caps for the rules that solve or enumerate subproblems.
struct Budgets {
    std::size_t subgraph_vertex_bound = 12;
    std::size_t generalized_fold_bound = 12;
    std::size_t heavy_set_bound = 8;
    std::size_t component_bound = 20;
    std::size_t confining_extensions = 32;
    std::size_t two_cut_candidates = 64;
    StructionBudget struction;
};

} // namespace mwis
