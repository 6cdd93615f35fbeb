#include "mwis/trace.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mwis {

using json = nlohmann::json;

namespace {

class Membership {
public:
    explicit Membership(std::size_t bound) : flags_(bound, 0) {}

    void grow(VertexId v)
    {
        if (v >= flags_.size()) flags_.resize(static_cast<std::size_t>(v) + 1, 0);
    }
    [[nodiscard]] bool contains(VertexId v) const { return v < flags_.size() && flags_[v]; }
    void insert(VertexId v)
    {
        grow(v);
        flags_[v] = 1;
    }
    void erase(VertexId v)
    {
        if (v < flags_.size()) flags_[v] = 0;
    }
    [[nodiscard]] VertexSet to_set() const
    {
        VertexSet out;
        for (std::size_t v = 0; v < flags_.size(); ++v)
            if (flags_[v]) out.push_back(static_cast<VertexId>(v));
        return out;
    }

private:
    std::vector<char> flags_;
};

bool matches(const LiftCase& c, const Membership& m)
{
    return std::all_of(c.when_in.begin(), c.when_in.end(), [&](VertexId v) { return m.contains(v); })
           && std::none_of(c.when_out.begin(), c.when_out.end(), [&](VertexId v) { return m.contains(v); });
}

void apply_event(const TraceEvent& event, Membership& m)
{
    if (!event.cases.empty()) {
        auto it = std::find_if(event.cases.begin(), event.cases.end(), [&](const LiftCase& c) { return matches(c, m); });
        if (it == event.cases.end())
            throw LiftError("no reconstruction case of " + std::string(rule_name(event.rule)) + " event matches");
        VertexSet expanded;
        for (const auto& [created, original] : it->expand)
            if (m.contains(created)) expanded.push_back(original);
        for (VertexId v : it->remove) m.erase(v);
        for (VertexId v : it->add) m.insert(v);
        for (VertexId v : expanded) m.insert(v);
    }
    for (VertexId v : event.created) m.erase(v);
}

VertexId max_id(const TraceEvent& e)
{
    VertexId out = 0;
    for (const auto& r : e.removed) out = std::max(out, r.id);
    if (!e.created.empty()) out = std::max(out, e.created.back());
    return out;
}

} // namespace

Solution make_solution(const WeightedGraph& g, VertexSet vertices)
{
    vertices = make_set(std::move(vertices));
    Weight w = g.weight_of(vertices);
    return {std::move(vertices), w};
}

void ReductionTrace::record(TraceEvent event)
{
    if (event.delta < 0) throw std::invalid_argument("trace event with negative offset delta");
    if (__builtin_add_overflow(offset_, event.delta, &offset_)) throw std::overflow_error("trace offset overflow");
    events_.push_back(std::move(event));
}

void ReductionTrace::append(const ReductionTrace& other)
{
    for (const auto& e : other.events()) record(e);
}

void lift_event(const TraceEvent& event, VertexSet& solution)
{
    VertexId bound = max_id(event);
    if (!solution.empty()) bound = std::max(bound, solution.back());
    Membership m(static_cast<std::size_t>(bound) + 1);
    for (VertexId v : solution) m.insert(v);
    apply_event(event, m);
    solution = m.to_set();
}

Solution lift(const ReductionTrace& trace, const Solution& kernel_solution, const WeightedGraph& original)
{
    std::size_t bound = original.id_bound();
    for (const auto& e : trace.events()) bound = std::max<std::size_t>(bound, static_cast<std::size_t>(max_id(e)) + 1);
    Membership m(bound);
    for (VertexId v : kernel_solution.vertices) m.insert(v);
    const auto& events = trace.events();
    for (auto it = events.rbegin(); it != events.rend(); ++it) apply_event(*it, m);

    VertexSet result = m.to_set();
    for (VertexId v : result)
        if (!original.is_active(v)) throw LiftError("lifted solution contains vertex " + std::to_string(v) + " not in the original graph");
    if (!original.is_independent(result)) throw LiftError("lifted solution is not independent in the original graph");
    Solution out{std::move(result), 0};
    out.weight = original.weight_of(out.vertices);
    if (out.weight != kernel_solution.weight + trace.offset())
        throw LiftError("lifted weight " + std::to_string(out.weight) + " differs from kernel weight plus offset "
                        + std::to_string(kernel_solution.weight + trace.offset()));
    return out;
}

Solution lift(const ReductionTrace& trace,
              const Solution& kernel_solution,
              const WeightedGraph& kernel,
              const WeightedGraph& original)
{
    for (VertexId v : kernel_solution.vertices)
        if (!kernel.is_active(v)) throw LiftError("kernel solution contains inactive vertex " + std::to_string(v));
    if (!kernel.is_independent(kernel_solution.vertices)) throw LiftError("kernel solution is not independent");
    if (kernel.weight_of(kernel_solution.vertices) != kernel_solution.weight)
        throw LiftError("kernel solution weight does not match its vertices");
    return lift(trace, kernel_solution, original);
}

std::string serialize_event(const TraceEvent& event)
{
    json removed = json::array();
    for (const auto& r : event.removed) removed.push_back(json::array({r.id, r.weight}));
    json cases = json::array();
    for (const auto& c : event.cases) {
        json jc = json::object();
        if (!c.when_in.empty()) jc["in"] = c.when_in;
        if (!c.when_out.empty()) jc["out"] = c.when_out;
        if (!c.remove.empty()) jc["remove"] = c.remove;
        if (!c.add.empty()) jc["add"] = c.add;
        if (!c.expand.empty()) {
            json ex = json::array();
            for (const auto& [k, v] : c.expand) ex.push_back(json::array({k, v}));
            jc["expand"] = std::move(ex);
        }
        cases.push_back(std::move(jc));
    }
    json j = {
        {"rule", rule_name(event.rule)},
        {"delta", event.delta},
        {"removed", std::move(removed)},
        {"created", event.created},
        {"payload", {{"cases", std::move(cases)}}},
    };
    return j.dump();
}

TraceEvent parse_event(std::string_view line)
{
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed trace line: ") + e.what());
    }
    TraceEvent e;
    auto name = j.at("rule").get<std::string>();
    auto rule = rule_from_name(name);
    if (!rule) throw std::runtime_error("unknown rule '" + name + "' in trace");
    e.rule = *rule;
    e.delta = j.at("delta").get<Weight>();
    for (const auto& r : j.at("removed")) e.removed.push_back({r.at(0).get<VertexId>(), r.at(1).get<Weight>()});
    e.created = j.at("created").get<VertexSet>();
    for (const auto& jc : j.at("payload").at("cases")) {
        LiftCase c;
        if (jc.contains("in")) c.when_in = jc["in"].get<VertexSet>();
        if (jc.contains("out")) c.when_out = jc["out"].get<VertexSet>();
        if (jc.contains("remove")) c.remove = jc["remove"].get<VertexSet>();
        if (jc.contains("add")) c.add = jc["add"].get<VertexSet>();
        if (jc.contains("expand"))
            for (const auto& p : jc["expand"]) c.expand.emplace_back(p.at(0).get<VertexId>(), p.at(1).get<VertexId>());
        e.cases.push_back(std::move(c));
    }
    return e;
}

std::string serialize_trace(const ReductionTrace& trace)
{
    std::string out;
    for (const auto& e : trace.events()) {
        out += serialize_event(e);
        out += '\n';
    }
    return out;
}

ReductionTrace parse_trace(std::string_view text)
{
    ReductionTrace trace;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        trace.record(parse_event(line));
    }
    return trace;
}

} // namespace mwis
