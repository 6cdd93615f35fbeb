#include "doctest.h"

#include "mwis/reductions.hpp"
#include "support/harness.hpp"

#include <algorithm>

using namespace mwis;
using mwis::testing::check_single_event;
using mwis::testing::make_graph;

namespace {

// Applies the attempt to a copy, checks it with the oracle and returns the
// event together with the graph after it.
struct Applied {
    RuleOutcome event;
    WeightedGraph after;
};

Applied apply(const WeightedGraph& g, const mwis::testing::Attempt& attempt)
{
    auto check = check_single_event(g, attempt);
    CHECK_MESSAGE(check.ok, check.detail);
    Applied out{std::nullopt, g};
    out.event = attempt(out.after);
    return out;
}

void expect_none(const WeightedGraph& g, const mwis::testing::Attempt& attempt)
{
    WeightedGraph copy = g;
    CHECK_FALSE(attempt(copy).has_value());
    CHECK(copy == g);
}

Weight created_weight(const Applied& a, std::size_t i = 0)
{
    REQUIRE(a.event->created.size() > i);
    return a.after.weight(a.event->created[i]);
}

} // namespace

TEST_CASE("degree one")
{
    auto r = apply(make_graph({4, 3}, {{0, 1}}), [](WeightedGraph& g) { return try_degree_one(g, 0); });
    REQUIRE(r.event);
    CHECK(r.event->delta == 4);
    CHECK(r.after.empty());

    // v:2 u:5 w:7, edges uv uw
    auto f = apply(make_graph({2, 5, 7}, {{0, 1}, {1, 2}}), [](WeightedGraph& g) { return try_degree_one(g, 0); });
    REQUIRE(f.event);
    CHECK(f.event->delta == 2);
    CHECK(created_weight(f) == 3);
    CHECK(f.after.num_vertices() == 2);
    CHECK(f.after.has_edge(f.event->created[0], 2));

    expect_none(make_graph({2, 5, 1}, {{0, 1}, {0, 2}}), [](WeightedGraph& g) { return try_degree_one(g, 0); });
}

TEST_CASE("degree two: triangle and v-shape")
{
    auto deg2 = [](WeightedGraph& g) { return try_degree_two(g, 0); };

    auto tri = apply(make_graph({9, 3, 5}, {{0, 1}, {0, 2}, {1, 2}}), deg2);
    REQUIRE(tri.event);
    CHECK(tri.event->rule == Rule::Triangle);
    CHECK(tri.event->delta == 9);

    auto v4 = apply(make_graph({5, 3, 4}, {{0, 1}, {0, 2}}), deg2);
    REQUIRE(v4.event);
    CHECK(v4.event->rule == Rule::VShape);
    CHECK(v4.event->delta == 5);
    CHECK(created_weight(v4) == 2);

    // v:1 x:3 y:5 z:2, edges vx vy xy yz
    auto t1 = apply(make_graph({1, 3, 5, 2}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), deg2);
    REQUIRE(t1.event);
    CHECK(t1.event->delta == 1);
    CHECK(t1.after.num_vertices() == 3);
    CHECK(t1.after.weight(1) == 2);
    CHECK(t1.after.weight(2) == 4);
    CHECK(t1.after.weight(3) == 2);
    CHECK(t1.after.has_edge(1, 2));
    CHECK(t1.after.has_edge(2, 3));

    auto vin = apply(make_graph({8, 3, 4}, {{0, 1}, {0, 2}}), deg2);
    REQUIRE(vin.event);
    CHECK(vin.event->delta == 8);
    CHECK(vin.after.empty());
}

TEST_CASE("degree two fires on every degree-two vertex")
{
    std::mt19937_64 rng(21);
    std::size_t seen = 0;
    for (int i = 0; i < 400; ++i) {
        WeightedGraph g = mwis::testing::mixed_generator(3, 12)(rng);
        for (VertexId v : g.vertices()) {
            if (g.degree(v) != 2) continue;
            ++seen;
            auto r = check_single_event(g, [v](WeightedGraph& h) { return try_degree_two(h, v); });
            CHECK(r.fired);
            CHECK_MESSAGE(r.ok, r.detail);
        }
    }
    CHECK(seen > 100);
}

TEST_CASE("path and cycle patterns")
{
    // a(5) b(4) c(3) d(2) as a path
    WeightedGraph p3 = make_graph({5, 4, 3, 2}, {{0, 1}, {1, 2}, {2, 3}});
    bool fired = false;
    for (VertexId anchor : {1u, 2u}) {
        auto r = apply(p3, [anchor](WeightedGraph& g) { return try_path_cycle(g, anchor); });
        if (!r.event) continue;
        fired = true;
        CHECK(r.event->rule == Rule::Path3);
        CHECK(r.event->delta == 4);
        CHECK(r.after.num_vertices() == 2);
        CHECK(r.after.weight(0) == 4);
        CHECK(r.after.weight(3) == 2);
        CHECK(r.after.has_edge(0, 3));
    }
    CHECK(fired);

    // v1(5) v2(4) v3(3) v4(6) as a cycle
    WeightedGraph c4 = make_graph({5, 4, 3, 6}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    fired = false;
    for (VertexId anchor : {1u, 2u}) {
        auto r = apply(c4, [anchor](WeightedGraph& g) { return try_path_cycle(g, anchor); });
        if (!r.event || r.event->rule != Rule::Cycle4) continue;
        fired = true;
        CHECK(r.event->delta == 4);
        CHECK(r.after.num_vertices() == 2);
        CHECK(r.after.weight(0) == 4);
        CHECK(r.after.weight(3) == 6);
        CHECK(r.after.has_edge(0, 3));
    }
    CHECK(fired);
}

TEST_CASE("neighborhood removal")
{
    auto nr = [](WeightedGraph& g) { return try_neighborhood_removal(g, 0); };
    auto r = apply(make_graph({7, 3, 4}, {{0, 1}, {0, 2}}), nr);
    REQUIRE(r.event);
    CHECK(r.event->delta == 7);
    expect_none(make_graph({6, 3, 4}, {{0, 1}, {0, 2}}), nr);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        WeightedGraph g = mwis::testing::random_instance(rng, 10, 10, {0.3}, 1, 10);
        for (VertexId v : g.vertices()) {
            auto c = check_single_event(g, [v](WeightedGraph& h) { return try_neighborhood_removal(h, v); });
            CHECK_MESSAGE(c.ok, c.detail);
        }
    }
}

TEST_CASE("heavy vertex")
{
    auto r = apply(make_graph({6, 3, 4}, {{0, 1}, {0, 2}, {1, 2}}),
                   [](WeightedGraph& g) { return try_heavy_vertex(g, 0); });
    REQUIRE(r.event);
    CHECK(r.event->delta == 6);
    expect_none(make_graph({3, 4}, {{0, 1}}), [](WeightedGraph& g) { return try_heavy_vertex(g, 0); });
    Budgets tight;
    tight.subgraph_vertex_bound = 1;
    expect_none(make_graph({6, 3, 4}, {{0, 1}, {0, 2}, {1, 2}}),
                [&](WeightedGraph& g) { return try_heavy_vertex(g, 0, tight); });
}

TEST_CASE("clique neighborhood removal")
{
    auto cnr = [](WeightedGraph& g) { return try_clique_neighborhood_removal(g, 0); };
    auto r = apply(make_graph({6, 3, 4, 2}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}), cnr);
    REQUIRE(r.event);
    CHECK(r.event->delta == 6);
    auto ind = apply(make_graph({5, 2, 3}, {{0, 1}, {0, 2}}), cnr);
    CHECK(ind.event.has_value());
    expect_none(make_graph({5, 3, 4, 2}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}), cnr);
}

TEST_CASE("neighborhood folding")
{
    auto nf = [](WeightedGraph& g) { return try_neighborhood_folding(g, 0); };
    auto r = apply(make_graph({5, 3, 4}, {{0, 1}, {0, 2}}), nf);
    REQUIRE(r.event);
    CHECK(r.event->delta == 5);
    CHECK(created_weight(r) == 2);
    expect_none(make_graph({5, 3, 4}, {{0, 1}, {0, 2}, {1, 2}}), nf);
    expect_none(make_graph({3, 3, 4}, {{0, 1}, {0, 2}}), nf);
}

TEST_CASE("generalized fold")
{
    // v:5 with N = {a:2, b:2, c:4}, edges ab ac
    WeightedGraph g = make_graph({5, 2, 2, 4}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto gf = [](WeightedGraph& h) { return try_generalized_fold(h, 0); };
    WeightedGraph cur = g;
    bool folded = false;
    for (int step = 0; step < 4 && cur.is_active(0); ++step) {
        auto r = apply(cur, gf);
        if (!r.event) break;
        CHECK(r.event->rule == Rule::GeneralizedFold);
        if (!r.event->created.empty()) {
            folded = true;
            CHECK(created_weight(r) == 1);
            CHECK(r.event->delta == 5);
        } else {
            CHECK(r.event->delta == 0); // exclusion of a neighbor
        }
        cur = r.after;
    }
    CHECK(folded);

    expect_none(make_graph({3, 4, 4}, {{0, 1}, {0, 2}, {1, 2}}), gf);

    // N(v) = {a:1, b:6, c:6} is a clique: two sets beat v, and a only
    // appears in lighter ones
    auto ex = apply(make_graph({5, 1, 6, 6}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), gf);
    REQUIRE(ex.event);
    CHECK(ex.event->delta == 0);
    CHECK_FALSE(ex.after.is_active(1));
}

TEST_CASE("two vertex neighborhood removal")
{
    // u:4 v:4 with shared neighbors a:3 b:4
    WeightedGraph g = make_graph({4, 4, 3, 4}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto r = apply(g, [](WeightedGraph& h) { return try_two_vertex_neighborhood_removal(h, 0, 1); });
    REQUIRE(r.event);
    CHECK(r.event->delta == 8);
    expect_none(make_graph({4, 4, 3}, {{0, 1}, {0, 2}}),
                [](WeightedGraph& h) { return try_two_vertex_neighborhood_removal(h, 0, 1); });
    expect_none(make_graph({3, 3, 3, 4}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                [](WeightedGraph& h) { return try_two_vertex_neighborhood_removal(h, 0, 1); });
}

TEST_CASE("heavy set")
{
    auto hs = [](WeightedGraph& h) { return try_heavy_set(h, 0, 1); };
    auto r = apply(make_graph({5, 5, 4, 4}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), hs);
    REQUIRE(r.event);
    CHECK(r.event->delta == 10);
    expect_none(make_graph({5, 5, 4, 4}, {{0, 2}, {1, 3}}), hs);
    expect_none(make_graph({1, 1, 4, 4}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), hs);
}

TEST_CASE("simplicial")
{
    auto sv = [](WeightedGraph& h) { return try_simplicial(h, 0); };
    auto inc = apply(make_graph({5, 3, 4}, {{0, 1}, {0, 2}, {1, 2}}), sv);
    REQUIRE(inc.event);
    CHECK(inc.event->rule == Rule::SimplicialVertex);
    CHECK(inc.event->delta == 5);

    // v:5 a:3 b:7 triangle, with b also attached elsewhere so it is not simplicial
    WeightedGraph g = make_graph({5, 3, 7, 1, 1}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}});
    auto wt = apply(g, sv);
    REQUIRE(wt.event);
    CHECK(wt.event->rule == Rule::SimplicialWeightTransfer);
    CHECK(wt.event->delta == 5);
    CHECK_FALSE(wt.after.is_active(0));
    CHECK_FALSE(wt.after.is_active(1));
    CHECK(wt.after.weight(2) == 2);

    expect_none(make_graph({5, 3, 4}, {{0, 1}, {0, 2}}), sv);
}

TEST_CASE("domination")
{
    WeightedGraph tri = make_graph({5, 3, 2}, {{0, 1}, {0, 2}, {1, 2}});
    auto r = apply(tri, [](WeightedGraph& h) { return try_domination(h, 0, 1); });
    REQUIRE(r.event);
    CHECK(r.event->delta == 0);
    CHECK_FALSE(r.after.is_active(1));
    expect_none(tri, [](WeightedGraph& h) { return try_domination(h, 1, 0); });
    expect_none(make_graph({5, 3, 1}, {{0, 1}, {0, 2}}), [](WeightedGraph& h) { return try_domination(h, 0, 1); });
}

TEST_CASE("basic single edge")
{
    auto bse = [](WeightedGraph& h) { return try_basic_single_edge(h, 0, 1); };
    auto r = apply(make_graph({5, 3}, {{0, 1}}), bse);
    REQUIRE(r.event);
    CHECK_FALSE(r.after.is_active(1));
    expect_none(make_graph({2, 3, 4}, {{0, 1}, {0, 2}}), bse);
    expect_none(make_graph({5, 3}), bse);
}

TEST_CASE("extended single edge")
{
    auto ese = [](WeightedGraph& h) { return try_extended_single_edge(h, 0, 1); };
    auto r = apply(make_graph({3, 6, 2}, {{0, 1}, {0, 2}, {1, 2}}), ese);
    REQUIRE(r.event);
    CHECK_FALSE(r.after.is_active(2));
    CHECK(r.after.is_active(0));
    CHECK(r.after.is_active(1));
    expect_none(make_graph({3, 6}, {{0, 1}}), ese);
    expect_none(make_graph({1, 2, 5, 9}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}), ese);
}

TEST_CASE("twin")
{
    auto tw = [](WeightedGraph& h) { return try_twin(h, 0, 1); };
    auto inc = apply(make_graph({4, 4, 3, 3}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), tw);
    REQUIRE(inc.event);
    CHECK(inc.event->delta == 8);
    auto fold = apply(make_graph({2, 2, 3, 3}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), tw);
    REQUIRE(fold.event);
    CHECK(fold.event->delta == 4);
    CHECK(created_weight(fold) == 2);
    expect_none(make_graph({2, 2, 3, 3}, {{0, 2}, {0, 3}, {1, 2}}), tw);
}

TEST_CASE("find_twins agrees with an exhaustive pair scan")
{
    auto pairs = find_twins(make_graph({4, 4, 3, 3}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair<VertexId, VertexId>{0, 1}) != pairs.end());
    CHECK(find_twins(make_graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}})).empty());

    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        WeightedGraph g = mwis::testing::mixed_generator(2, 12)(rng);
        std::vector<std::pair<VertexId, VertexId>> expected;
        VertexSet vs = g.vertices();
        for (VertexId u : vs)
            for (VertexId v : vs)
                if (u < v && !g.has_edge(u, v) && g.degree(u) > 0 &&
                    std::ranges::equal(g.neighbors(u), g.neighbors(v)))
                    expected.emplace_back(u, v);
        // each twin class is reported as pairs with one representative
        auto found = find_twins(g);
        std::vector<VertexId> rep(g.id_bound());
        for (VertexId v : vs) rep[v] = v;
        for (auto p : found) {
            CHECK(std::ranges::equal(g.neighbors(p.first), g.neighbors(p.second)));
            rep[p.second] = p.first;
        }
        for (auto p : expected) CHECK(rep[p.first] == rep[p.second]);
    }
}

TEST_CASE("twin inclusion implies the heavy set condition")
{
    std::mt19937_64 rng(12);
    std::size_t seen = 0;
    for (int i = 0; i < 3000 && seen < 50; ++i) {
        WeightedGraph g = mwis::testing::mixed_generator(3, 12)(rng);
        for (auto [u, v] : find_twins(g)) {
            WeightedGraph h = g;
            auto ev = try_twin(h, u, v);
            if (!ev || !ev->created.empty() || g.degree(u) > 8) continue;
            ++seen;
            WeightedGraph k = g;
            CHECK(try_heavy_set(k, u, v).has_value());
        }
    }
    CHECK(seen >= 50);
}

TEST_CASE("zero weight exclusion")
{
    auto r = apply(make_graph({0, 3}, {{0, 1}}), [](WeightedGraph& h) { return try_exclude_zero_weight(h, 0); });
    REQUIRE(r.event);
    CHECK(r.event->delta == 0);
    expect_none(make_graph({1, 3}, {{0, 1}}), [](WeightedGraph& h) { return try_exclude_zero_weight(h, 0); });
}
