#pragma once

#include "mwis/graph.hpp"
#include "mwis/rule.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mwis {

/// One branch of an event's reconstruction formula.
///
/// A case matches the current solution when every vertex of `when_in` is in it
/// and no vertex of `when_out` is. Applying a case first expands created
/// vertices present in the solution (`expand` pairs a created vertex with one
/// original vertex it stands for), then removes `remove` and adds `add`.
/// Afterwards all vertices created by the event are dropped.
struct LiftCase {
    VertexSet when_in;
    VertexSet when_out;
    VertexSet remove;
    VertexSet add;
    std::vector<std::pair<VertexId, VertexId>> expand;

    friend bool operator==(const LiftCase&, const LiftCase&) = default;
};

struct RemovedVertex {
    VertexId id;
    Weight weight;

    friend bool operator==(const RemovedVertex&, const RemovedVertex&) = default;
};

/// One applied reduction. Cases are tried in order; an event without cases
/// needs no reconstruction (pure exclusions).
struct TraceEvent {
    Rule rule = Rule::ExcludeZeroWeight;
    Weight delta = 0;
    std::vector<RemovedVertex> removed;
    VertexSet created;
    std::vector<LiftCase> cases;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Not applicable, or the event describing the applied mutation.
using RuleOutcome = std::optional<TraceEvent>;

struct Solution {
    VertexSet vertices;
    Weight weight = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

Solution make_solution(const WeightedGraph& g, VertexSet vertices);

class ReductionTrace {
public:
    void record(TraceEvent event);
    void append(const ReductionTrace& other);

    [[nodiscard]] Weight offset() const noexcept { return offset_; }
    [[nodiscard]] const std::vector<TraceEvent>& events() const noexcept { return events_; }
    [[nodiscard]] std::size_t size() const noexcept { return events_.size(); }
    [[nodiscard]] bool empty() const noexcept { return events_.empty(); }

    friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;

private:
    std::vector<TraceEvent> events_;
    Weight offset_ = 0;
};

/// Thrown when lifting produces a set that is not independent, or when the
/// kernel solution itself is invalid.
class LiftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undo one event on a solution of the graph right after that event.
void lift_event(const TraceEvent& event, VertexSet& solution);

/// Replays the trace last-applied-first. The kernel solution must be a maximum
/// weight independent set of the kernel; the result is validated against the
/// original graph and its weight must equal kernel weight plus offset.
Solution lift(const ReductionTrace& trace, const Solution& kernel_solution, const WeightedGraph& original);

/// As above, additionally checking the kernel solution against the kernel.
Solution lift(const ReductionTrace& trace,
              const Solution& kernel_solution,
              const WeightedGraph& kernel,
              const WeightedGraph& original);

/// JSON-lines serialization, one event per line with keys
/// `rule`, `delta`, `removed`, `created`, `payload`.
std::string serialize_event(const TraceEvent& event);
TraceEvent parse_event(std::string_view line);
std::string serialize_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text);

} // namespace mwis
