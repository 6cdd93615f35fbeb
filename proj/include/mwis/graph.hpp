#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mwis {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

class WeightedGraph;

/// Result of WeightedGraph::induced_subgraph. Vertex i of `graph` corresponds
/// to `to_parent[i]` of the parent graph.
struct InducedSubgraph;

/// Dynamic vertex-weighted undirected graph.
///
/// Vertex ids are allocated monotonically and never reused, so a trace can refer
/// to a vertex long after it has been removed. Adjacency lists are kept sorted,
/// which makes every neighborhood query deterministic.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::span<const Weight> weights);
    WeightedGraph(const WeightedGraph&) = default;
    WeightedGraph& operator=(const WeightedGraph&) = default;
    WeightedGraph(WeightedGraph&& other) noexcept;
    WeightedGraph& operator=(WeightedGraph&& other) noexcept;

    VertexId add_vertex(Weight weight);
    void remove_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);
    void set_weight(VertexId v, Weight weight);

    [[nodiscard]] bool is_active(VertexId v) const noexcept
    {
        return v < active_.size() && active_[v];
    }
    [[nodiscard]] Weight weight(VertexId v) const
    {
        require_active(v);
        return weight_[v];
    }
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const
    {
        require_active(v);
        return adjacency_[v];
    }
    [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;

    [[nodiscard]] VertexSet closed_neighborhood(VertexId v) const;
    /// N(U): union of the neighborhoods of U minus U itself.
    [[nodiscard]] VertexSet set_neighborhood(std::span<const VertexId> vertices) const;
    /// N[U] = N(U) ∪ U.
    [[nodiscard]] VertexSet closed_set_neighborhood(std::span<const VertexId> vertices) const;

    [[nodiscard]] bool is_independent(std::span<const VertexId> vertices) const;
    [[nodiscard]] Weight weight_of(std::span<const VertexId> vertices) const;
    [[nodiscard]] bool is_clique(std::span<const VertexId> vertices) const;

    [[nodiscard]] InducedSubgraph induced_subgraph(std::span<const VertexId> vertices) const;
    [[nodiscard]] std::vector<VertexSet> connected_components() const;

    /// Active vertices in ascending id order.
    [[nodiscard]] VertexSet vertices() const;
    [[nodiscard]] std::size_t num_vertices() const noexcept { return num_active_; }
    [[nodiscard]] std::size_t num_edges() const noexcept { return num_edges_; }
    /// One past the largest id ever allocated.
    [[nodiscard]] VertexId id_bound() const noexcept { return static_cast<VertexId>(active_.size()); }
    [[nodiscard]] bool empty() const noexcept { return num_active_ == 0; }

    /// Reserve ids up to `bound` without creating vertices, so that a session
    /// continuing from a serialized kernel never reuses an id.
    void reserve_ids(VertexId bound);

    /// When enabled, every mutation records the vertices whose weight or
    /// adjacency changed. The scheduler uses this to find dirty vertices.
    void set_journaling(bool enabled) noexcept { journaling_ = enabled; }
    [[nodiscard]] VertexSet drain_journal();

    /// Content stamp: two graphs with the same version have identical
    /// content. Every mutation draws a fresh process-wide stamp; copies keep it.
    [[nodiscard]] std::uint64_t version() const noexcept { return version_; }

    /// Full rescan of the structural invariants; throws std::logic_error on
    /// the first violation. Intended for tests.
    void check_invariants() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    void require_active(VertexId v) const
    {
        if (!is_active(v)) [[unlikely]]
            throw_inactive(v);
    }
    [[noreturn]] static void throw_inactive(VertexId v);
    void touch(VertexId v);
    void restamp() noexcept;
    void account_weight(Weight added);

    std::vector<Weight> weight_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<char> active_;
    std::size_t num_active_ = 0;
    std::size_t num_edges_ = 0;
    Weight created_weight_ = 0;
    bool journaling_ = false;
    std::uint64_t version_ = 0;
    std::vector<VertexId> journal_;
};

struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<VertexId> to_parent;

    /// Maps a parent id to the subgraph id; the id must be part of the subgraph.
    [[nodiscard]] VertexId from_parent(VertexId parent) const;
    [[nodiscard]] VertexSet lift_set(std::span<const VertexId> sub) const;
};

/// Sorted-set helpers over VertexSet.
VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_intersection(std::span<const VertexId> a, std::span<const VertexId> b);
bool set_contains(std::span<const VertexId> set, VertexId v);
bool is_subset(std::span<const VertexId> sub, std::span<const VertexId> super);
VertexSet make_set(std::vector<VertexId> ids);

} // namespace mwis
