#include "mwis/solver.hpp"

#include "mwis/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mwis {

namespace {

// Dense view of a vertex subset used by the exhaustive routines.
struct DenseGraph {
    std::vector<VertexId> ids;
    std::vector<Weight> weights;
    std::vector<std::uint64_t> adjacency;
};

DenseGraph dense_view(const WeightedGraph& g, std::span<const VertexId> within)
{
    if (within.size() > 64) throw std::invalid_argument("dense view limited to 64 vertices");
    DenseGraph d;
    d.ids = make_set(VertexSet(within.begin(), within.end()));
    d.weights.resize(d.ids.size());
    d.adjacency.assign(d.ids.size(), 0);
    for (std::size_t i = 0; i < d.ids.size(); ++i) {
        d.weights[i] = g.weight(d.ids[i]);
        for (std::size_t j = 0; j < d.ids.size(); ++j)
            if (i != j && g.has_edge(d.ids[i], d.ids[j])) d.adjacency[i] |= std::uint64_t{1} << j;
    }
    return d;
}

class BruteForce {
public:
    explicit BruteForce(const DenseGraph& d) : d_(d)
    {
        suffix_.assign(d.ids.size() + 1, 0);
        for (std::size_t i = d.ids.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + d.weights[i];
    }

    Solution run()
    {
        std::vector<std::size_t> chosen;
        search(0, 0, 0, chosen);
        Solution s;
        for (std::size_t i : best_) s.vertices.push_back(d_.ids[i]);
        s.weight = best_weight_;
        return s;
    }

private:
    void search(std::size_t i, std::uint64_t blocked, Weight current, std::vector<std::size_t>& chosen)
    {
        if (current + suffix_[i] < best_weight_) return;
        if (i == d_.ids.size()) {
            bool smaller = current == best_weight_
                           && std::lexicographical_compare(chosen.begin(), chosen.end(), best_.begin(), best_.end());
            if (current > best_weight_ || smaller) {
                best_weight_ = current;
                best_ = chosen;
            }
            return;
        }
        if (!(blocked >> i & 1)) {
            chosen.push_back(i);
            search(i + 1, blocked | d_.adjacency[i], current + d_.weights[i], chosen);
            chosen.pop_back();
        }
        search(i + 1, blocked, current, chosen);
    }

    const DenseGraph& d_;
    std::vector<Weight> suffix_;
    std::vector<std::size_t> best_;
    Weight best_weight_ = 0;
};

class BitmaskSolver {
public:
    explicit BitmaskSolver(const DenseGraph& d) : d_(d) {}

    std::uint64_t run(Weight& weight)
    {
        std::uint64_t all = d_.ids.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d_.ids.size()) - 1;
        search(all, 0, 0);
        weight = best_weight_;
        return best_;
    }

private:
    Weight mask_weight(std::uint64_t mask) const
    {
        Weight w = 0;
        for (; mask; mask &= mask - 1) w += d_.weights[std::countr_zero(mask)];
        return w;
    }

    void search(std::uint64_t candidates, std::uint64_t chosen, Weight current)
    {
        if (found_ && current + mask_weight(candidates) <= best_weight_) return;
        int pivot = -1;
        int pivot_degree = 0;
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            int i = std::countr_zero(m);
            int deg = std::popcount(d_.adjacency[i] & candidates);
            if (deg > pivot_degree) pivot = i, pivot_degree = deg;
        }
        if (pivot < 0) {
            Weight total = current + mask_weight(candidates);
            if (!found_ || total > best_weight_) {
                found_ = true;
                best_weight_ = total;
                best_ = chosen | candidates;
            }
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << pivot;
        search(candidates & ~bit & ~d_.adjacency[pivot], chosen | bit, current + d_.weights[pivot]);
        search(candidates & ~bit, chosen, current);
    }

    const DenseGraph& d_;
    std::uint64_t best_ = 0;
    Weight best_weight_ = 0;
    bool found_ = false;
};

} // namespace

Solution brute_force_mwis(const WeightedGraph& g, std::size_t max_vertices)
{
    if (g.num_vertices() > max_vertices || g.num_vertices() > 64)
        throw std::invalid_argument("graph too large for exhaustive search: " + std::to_string(g.num_vertices())
                                    + " vertices");
    VertexSet all = g.vertices();
    DenseGraph d = dense_view(g, all);
    return BruteForce(d).run();
}

std::optional<std::vector<VertexSet>> enumerate_independent_sets(const WeightedGraph& g,
                                                                 std::span<const VertexId> within,
                                                                 std::size_t cap)
{
    VertexSet ids = make_set(VertexSet(within.begin(), within.end()));
    std::vector<VertexSet> out;
    VertexSet current;
    std::vector<int> blocked(ids.size(), 0);
    bool aborted = false;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (aborted) return;
        if (i == ids.size()) {
            if (out.size() == cap) {
                aborted = true;
                return;
            }
            out.push_back(current);
            return;
        }
        self(self, i + 1);
        if (blocked[i] == 0) {
            current.push_back(ids[i]);
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (g.has_edge(ids[i], ids[j])) ++blocked[j];
            self(self, i + 1);
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (g.has_edge(ids[i], ids[j])) --blocked[j];
            current.pop_back();
        }
    };
    rec(rec, 0);
    if (aborted) return std::nullopt;
    return out;
}

Solution exact_mwis(const WeightedGraph& g, std::span<const VertexId> within)
{
    DenseGraph d = dense_view(g, within);
    Solution s;
    std::uint64_t mask = BitmaskSolver(d).run(s.weight);
    for (; mask; mask &= mask - 1) s.vertices.push_back(d.ids[std::countr_zero(mask)]);
    return s;
}

Weight exact_mwis_weight(const WeightedGraph& g, std::span<const VertexId> within)
{
    return exact_mwis(g, within).weight;
}

std::vector<VertexSet> greedy_clique_partition(const WeightedGraph& g, std::span<const VertexId> within)
{
    const VertexSet members = make_set(VertexSet(within.begin(), within.end()));
    VertexSet order = members;
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.weight(a) > g.weight(b); });
    // indexed by position in `members`; 1 once assigned
    std::vector<char> assigned(members.size(), 0);
    auto position = [&](VertexId v) -> std::optional<std::size_t> {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        if (it == members.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - members.begin());
    };
    auto is_assigned = [&](VertexId v) { return assigned[*position(v)] != 0; };
    auto mark = [&](VertexId v) { assigned[*position(v)] = 1; };

    std::vector<VertexSet> cliques;
    for (VertexId seed : order) {
        if (is_assigned(seed)) continue;
        VertexSet clique{seed};
        mark(seed);
        VertexSet candidates;
        for (VertexId u : g.neighbors(seed))
            if (auto p = position(u); p && !assigned[*p]) candidates.push_back(u);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](VertexId a, VertexId b) { return g.weight(a) > g.weight(b); });
        for (VertexId u : candidates) {
            bool compatible = std::all_of(clique.begin(), clique.end(), [&](VertexId c) { return g.has_edge(u, c); });
            if (compatible) {
                clique.push_back(u);
                mark(u);
            }
        }
        cliques.push_back(make_set(std::move(clique)));
    }
    return cliques;
}

Weight clique_cover_bound(const WeightedGraph& g, std::span<const VertexId> within)
{
    Weight bound = 0;
    for (const auto& clique : greedy_clique_partition(g, within)) {
        Weight heaviest = 0;
        for (VertexId v : clique) heaviest = std::max(heaviest, g.weight(v));
        bound += heaviest;
    }
    return bound;
}

Weight clique_cover_bound(const WeightedGraph& g)
{
    VertexSet all = g.vertices();
    return clique_cover_bound(g, all);
}

Solution greedy_mwis(const WeightedGraph& g)
{
    VertexSet order = g.vertices();
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        // weight per blocked neighbor, compared without division
        return g.weight(a) * static_cast<Weight>(g.degree(b) + 1) > g.weight(b) * static_cast<Weight>(g.degree(a) + 1);
    });
    std::vector<char> blocked(g.id_bound(), 0);
    Solution s;
    for (VertexId v : order) {
        if (blocked[v]) continue;
        s.vertices.push_back(v);
        blocked[v] = 1;
        for (VertexId u : g.neighbors(v)) blocked[u] = 1;
    }
    return make_solution(g, std::move(s.vertices));
}

namespace {

struct BudgetExhausted {};

constexpr std::size_t kLeafSize = 20;

class BranchAndReduce {
public:
    BranchAndReduce(const ReducerConfig& config, const SolveBudget& budget)
        : config_(config), budget_(budget), start_(std::chrono::steady_clock::now())
    {
        config_.time_limit.reset();
    }

    // Best solution of g heavier than `lower`, or nullopt if none exists.
    std::optional<Solution> solve(const WeightedGraph& g, Weight lower)
    {
        tick();
        WeightedGraph k = g;
        ReductionTrace trace;
        reduce_in_place(k, config_, trace);
        Weight offset = trace.offset();

        auto kernel_solution = solve_kernel(k, lower - offset);
        if (!kernel_solution) return std::nullopt;
        return lift(trace, *kernel_solution, g);
    }

    std::size_t nodes() const { return nodes_; }

private:
    void tick()
    {
        ++nodes_;
        if (nodes_ > budget_.node_limit) throw BudgetExhausted{};
        if (budget_.time_limit && std::chrono::steady_clock::now() - start_ > *budget_.time_limit)
            throw BudgetExhausted{};
    }

    std::optional<Solution> solve_kernel(const WeightedGraph& k, Weight lower)
    {
        if (k.empty()) return lower < 0 ? std::optional<Solution>(Solution{}) : std::nullopt;

        auto components = k.connected_components();
        if (components.size() > 1) return solve_components(k, components, lower);

        if (k.num_vertices() <= kLeafSize) {
            VertexSet all = k.vertices();
            Solution s = exact_mwis(k, all);
            if (s.weight > lower) return s;
            return std::nullopt;
        }
        if (clique_cover_bound(k) <= lower) return std::nullopt;

        VertexSet all = k.vertices();
        VertexId pivot = *std::min_element(all.begin(), all.end(), [&](VertexId a, VertexId b) {
            if (k.degree(a) != k.degree(b)) return k.degree(a) > k.degree(b);
            if (k.weight(a) != k.weight(b)) return k.weight(a) > k.weight(b);
            return a < b;
        });

        std::optional<Solution> best;
        {
            WeightedGraph with = k;
            for (VertexId u : k.closed_neighborhood(pivot)) with.remove_vertex(u);
            Weight w = k.weight(pivot);
            if (auto s = solve(with, lower - w)) {
                s->vertices.push_back(pivot);
                s->vertices = make_set(std::move(s->vertices));
                s->weight += w;
                lower = s->weight;
                best = std::move(s);
            }
        }
        {
            WeightedGraph without = k;
            without.remove_vertex(pivot);
            if (auto s = solve(without, lower)) best = std::move(s);
        }
        return best;
    }

    std::optional<Solution> solve_components(const WeightedGraph& k, std::vector<VertexSet>& components, Weight lower)
    {
        std::stable_sort(components.begin(), components.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
        std::vector<Weight> bounds;
        Weight remaining = 0;
        for (const auto& c : components) {
            bounds.push_back(clique_cover_bound(k, c));
            remaining += bounds.back();
        }
        Solution total;
        for (std::size_t i = 0; i < components.size(); ++i) {
            remaining -= bounds[i];
            InducedSubgraph sub = k.induced_subgraph(components[i]);
            Weight need = lower - total.weight - remaining;
            auto s = solve(sub.graph, std::max<Weight>(need, -1));
            if (!s) return std::nullopt;
            VertexSet mapped = sub.lift_set(s->vertices);
            total.vertices.insert(total.vertices.end(), mapped.begin(), mapped.end());
            total.weight += s->weight;
        }
        if (total.weight <= lower) return std::nullopt;
        total.vertices = make_set(std::move(total.vertices));
        return total;
    }

    ReducerConfig config_;
    SolveBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::size_t nodes_ = 0;
};

} // namespace

SolveResult branch_and_reduce_solve(const WeightedGraph& g, const ReducerConfig& config, const SolveBudget& budget)
{
    BranchAndReduce solver(config, budget);
    SolveResult result;
    try {
        auto s = solver.solve(g, -1);
        result.solution = std::move(*s);
        result.optimal = true;
        result.upper_bound = result.solution.weight;
    } catch (const BudgetExhausted&) {
        result.solution = greedy_mwis(g);
        result.optimal = false;
        result.upper_bound = clique_cover_bound(g);
    }
    result.nodes = solver.nodes();
    return result;
}

SolveResult branch_and_reduce_solve(const WeightedGraph& g, const SolveBudget& budget)
{
    return branch_and_reduce_solve(g, ReducerConfig::first_tiers(2), budget);
}

} // namespace mwis
