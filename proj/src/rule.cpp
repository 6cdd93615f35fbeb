#include "mwis/rule.hpp"

namespace mwis {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "degree_one",
    "triangle",
    "v_shape",
    "path3",
    "path4",
    "cycle4",
    "cycle5",
    "cycle6",
    "heavy_vertex",
    "neighborhood_removal",
    "clique_neighborhood_removal",
    "neighborhood_folding",
    "generalized_fold",
    "two_vertex_neighborhood_removal",
    "heavy_set",
    "simplicial_vertex",
    "simplicial_weight_transfer",
    "domination",
    "basic_single_edge",
    "extended_single_edge",
    "struction_original",
    "struction_modified",
    "struction_extended",
    "struction_extended_reduced",
    "unconfined",
    "simultaneous_confined",
    "uncovered",
    "simultaneous_cover",
    "one_vertex_cut",
    "two_vertex_cut",
    "cwis",
    "twin",
    "exclude_zero_weight",
};

constexpr std::array<std::string_view, kReductionCount> kReductionNames = {
    "degree_one",
    "degree_two",
    "path_cycle",
    "neighborhood_removal",
    "domination",
    "basic_single_edge",
    "extended_single_edge",
    "simplicial",
    "twin",
    "clique_neighborhood_removal",
    "unconfined",
    "uncovered",
    "simultaneous_confined",
    "simultaneous_cover",
    "heavy_vertex",
    "neighborhood_folding",
    "generalized_fold",
    "heavy_set",
    "two_vertex_neighborhood_removal",
    "struction_extended_reduced",
    "struction_extended",
    "struction_modified",
    "struction_original",
    "cwis",
    "one_vertex_cut",
    "two_vertex_cut",
};

} // namespace

std::string_view rule_name(Rule rule) { return kRuleNames.at(static_cast<std::size_t>(rule)); }

std::optional<Rule> rule_from_name(std::string_view name)
{
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (kRuleNames[i] == name) return static_cast<Rule>(i);
    return std::nullopt;
}

std::string_view reduction_name(Reduction reduction)
{
    return kReductionNames.at(static_cast<std::size_t>(reduction));
}

std::optional<Reduction> reduction_from_name(std::string_view name)
{
    for (std::size_t i = 0; i < kReductionNames.size(); ++i)
        if (kReductionNames[i] == name) return static_cast<Reduction>(i);
    return std::nullopt;
}

} // namespace mwis
