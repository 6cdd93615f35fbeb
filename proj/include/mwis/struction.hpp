#pragma once

#include "mwis/graph.hpp"
#include "mwis/rule.hpp"
#include "mwis/trace.hpp"

namespace mwis {

// All four transformations remove the center v with offset ω(v). The new
// vertices are planned first and the graph is only touched when the plan fits
// the budget, so a rejected attempt leaves the graph unchanged.

RuleOutcome try_struction_original(WeightedGraph& g, VertexId v, const StructionBudget& budget = {});
RuleOutcome try_struction_modified(WeightedGraph& g, VertexId v, const StructionBudget& budget = {});
RuleOutcome try_struction_extended(WeightedGraph& g, VertexId v, const StructionBudget& budget = {});
RuleOutcome try_struction_extended_reduced(WeightedGraph& g, VertexId v, const StructionBudget& budget = {});

} // namespace mwis
