#include "mwis/graph.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <string>

namespace mwis {

namespace {

std::string vertex_name(VertexId v) { return "vertex " + std::to_string(v); }

} // namespace

WeightedGraph::WeightedGraph(std::span<const Weight> weights)
{
    for (Weight w : weights) add_vertex(w);
}

void WeightedGraph::account_weight(Weight added)
{
    if (added <= 0) return;
    if (__builtin_add_overflow(created_weight_, added, &created_weight_))
        throw std::overflow_error("total vertex weight overflows 64-bit range");
}

VertexId WeightedGraph::add_vertex(Weight weight)
{
    restamp();
    if (weight < 0) throw std::invalid_argument("negative vertex weight");
    account_weight(weight);
    auto id = static_cast<VertexId>(active_.size());
    weight_.push_back(weight);
    adjacency_.emplace_back();
    active_.push_back(1);
    ++num_active_;
    touch(id);
    return id;
}

void WeightedGraph::reserve_ids(VertexId bound)
{
    restamp();
    while (active_.size() < bound) {
        weight_.push_back(0);
        adjacency_.emplace_back();
        active_.push_back(0);
    }
}

void WeightedGraph::throw_inactive(VertexId v)
{
    throw std::invalid_argument(vertex_name(v) + " is not active");
}

namespace {
std::atomic<std::uint64_t> next_stamp{1};
}

void WeightedGraph::restamp() noexcept { version_ = next_stamp.fetch_add(1, std::memory_order_relaxed); }

WeightedGraph::WeightedGraph(WeightedGraph&& other) noexcept
    : weight_(std::move(other.weight_)), adjacency_(std::move(other.adjacency_)), active_(std::move(other.active_)),
      num_active_(other.num_active_), num_edges_(other.num_edges_), created_weight_(other.created_weight_),
      journaling_(other.journaling_), journal_(std::move(other.journal_)), version_(other.version_)
{
    other = WeightedGraph();
}

WeightedGraph& WeightedGraph::operator=(WeightedGraph&& other) noexcept
{
    if (this == &other) return *this;
    weight_ = std::move(other.weight_);
    adjacency_ = std::move(other.adjacency_);
    active_ = std::move(other.active_);
    num_active_ = other.num_active_;
    num_edges_ = other.num_edges_;
    created_weight_ = other.created_weight_;
    journaling_ = other.journaling_;
    journal_ = std::move(other.journal_);
    version_ = other.version_;
    other.weight_.clear();
    other.adjacency_.clear();
    other.active_.clear();
    other.journal_.clear();
    other.num_active_ = other.num_edges_ = 0;
    other.created_weight_ = 0;
    other.version_ = 0;
    return *this;
}

void WeightedGraph::touch(VertexId v)
{
    if (journaling_) journal_.push_back(v);
}

void WeightedGraph::remove_vertex(VertexId v)
{
    restamp();
    require_active(v);
    for (VertexId u : adjacency_[v]) {
        auto& list = adjacency_[u];
        list.erase(std::lower_bound(list.begin(), list.end(), v));
        touch(u);
    }
    num_edges_ -= adjacency_[v].size();
    adjacency_[v].clear();
    adjacency_[v].shrink_to_fit();
    active_[v] = 0;
    --num_active_;
}

void WeightedGraph::add_edge(VertexId u, VertexId v)
{
    restamp();
    if (u == v) throw std::invalid_argument("self-loop on " + vertex_name(u));
    require_active(u);
    require_active(v);
    auto& lu = adjacency_[u];
    auto it = std::lower_bound(lu.begin(), lu.end(), v);
    if (it != lu.end() && *it == v) return;
    lu.insert(it, v);
    auto& lv = adjacency_[v];
    lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
    ++num_edges_;
    touch(u);
    touch(v);
}

void WeightedGraph::set_weight(VertexId v, Weight weight)
{
    restamp();
    require_active(v);
    if (weight < 0) throw std::invalid_argument("negative weight for " + vertex_name(v));
    account_weight(weight - weight_[v]);
    weight_[v] = weight;
    touch(v);
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const
{
    auto nu = neighbors(u);
    auto nv = neighbors(v);
    if (nu.size() > nv.size()) std::swap(u, v), std::swap(nu, nv);
    return std::binary_search(nu.begin(), nu.end(), v);
}

VertexSet WeightedGraph::closed_neighborhood(VertexId v) const
{
    auto n = neighbors(v);
    VertexSet out(n.begin(), n.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

VertexSet WeightedGraph::set_neighborhood(std::span<const VertexId> vertices) const
{
    VertexSet out;
    for (VertexId v : vertices) {
        auto n = neighbors(v);
        out.insert(out.end(), n.begin(), n.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    VertexSet sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    return set_difference(out, sorted);
}

VertexSet WeightedGraph::closed_set_neighborhood(std::span<const VertexId> vertices) const
{
    VertexSet sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return set_union(set_neighborhood(sorted), sorted);
}

bool WeightedGraph::is_independent(std::span<const VertexId> vertices) const
{
    VertexSet sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (VertexId v : sorted) {
        auto n = neighbors(v);
        if (!set_intersection(n, sorted).empty()) return false;
    }
    return true;
}

Weight WeightedGraph::weight_of(std::span<const VertexId> vertices) const
{
    Weight total = 0;
    for (VertexId v : vertices) total += weight(v);
    return total;
}

bool WeightedGraph::is_clique(std::span<const VertexId> vertices) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!has_edge(vertices[i], vertices[j])) return false;
    return true;
}

InducedSubgraph WeightedGraph::induced_subgraph(std::span<const VertexId> vertices) const
{
    InducedSubgraph sub;
    sub.to_parent.assign(vertices.begin(), vertices.end());
    std::sort(sub.to_parent.begin(), sub.to_parent.end());
    sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());
    for (VertexId v : sub.to_parent) sub.graph.add_vertex(weight(v));
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        for (VertexId u : neighbors(sub.to_parent[i])) {
            auto it = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), u);
            if (it == sub.to_parent.end() || *it != u) continue;
            auto j = static_cast<VertexId>(it - sub.to_parent.begin());
            if (j > i) sub.graph.add_edge(static_cast<VertexId>(i), j);
        }
    }
    return sub;
}

std::vector<VertexSet> WeightedGraph::connected_components() const
{
    std::vector<VertexSet> components;
    std::vector<bool> seen(active_.size(), false);
    for (VertexId start = 0; start < active_.size(); ++start) {
        if (!active_[start] || seen[start]) continue;
        VertexSet component;
        std::queue<VertexId> queue;
        queue.push(start);
        seen[start] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            component.push_back(v);
            for (VertexId u : adjacency_[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

VertexSet WeightedGraph::vertices() const
{
    VertexSet out;
    out.reserve(num_active_);
    for (VertexId v = 0; v < active_.size(); ++v)
        if (active_[v]) out.push_back(v);
    return out;
}

VertexSet WeightedGraph::drain_journal()
{
    VertexSet out;
    out.swap(journal_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void WeightedGraph::check_invariants() const
{
    std::size_t active = 0;
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < active_.size(); ++v) {
        if (!active_[v]) {
            if (!adjacency_[v].empty()) throw std::logic_error(vertex_name(v) + " inactive but has neighbors");
            continue;
        }
        ++active;
        if (weight_[v] < 0) throw std::logic_error(vertex_name(v) + " has negative weight");
        const auto& list = adjacency_[v];
        degree_sum += list.size();
        for (std::size_t i = 0; i < list.size(); ++i) {
            VertexId u = list[i];
            if (i > 0 && list[i - 1] >= u) throw std::logic_error("adjacency of " + vertex_name(v) + " not sorted");
            if (u == v) throw std::logic_error("self-loop on " + vertex_name(v));
            if (!is_active(u)) throw std::logic_error(vertex_name(v) + " adjacent to inactive vertex");
            if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v))
                throw std::logic_error("asymmetric edge at " + vertex_name(v));
        }
    }
    if (active != num_active_) throw std::logic_error("active vertex count out of sync");
    if (degree_sum != 2 * num_edges_) throw std::logic_error("edge count out of sync");
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b)
{
    if (a.num_active_ != b.num_active_ || a.num_edges_ != b.num_edges_) return false;
    const auto bound = std::max(a.active_.size(), b.active_.size());
    for (VertexId v = 0; v < bound; ++v) {
        bool in_a = a.is_active(v);
        if (in_a != b.is_active(v)) return false;
        if (!in_a) continue;
        if (a.weight_[v] != b.weight_[v] || a.adjacency_[v] != b.adjacency_[v]) return false;
    }
    return true;
}

VertexId InducedSubgraph::from_parent(VertexId parent) const
{
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
    if (it == to_parent.end() || *it != parent)
        throw std::invalid_argument(vertex_name(parent) + " is not part of the subgraph");
    return static_cast<VertexId>(it - to_parent.begin());
}

VertexSet InducedSubgraph::lift_set(std::span<const VertexId> sub) const
{
    VertexSet out;
    out.reserve(sub.size());
    for (VertexId v : sub) out.push_back(to_parent.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b)
{
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b)
{
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const VertexId> a, std::span<const VertexId> b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(std::span<const VertexId> set, VertexId v)
{
    return std::binary_search(set.begin(), set.end(), v);
}

bool is_subset(std::span<const VertexId> sub, std::span<const VertexId> super)
{
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VertexSet make_set(std::vector<VertexId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace mwis
