#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tollkit/enumerate.hpp"
#include "tollkit/products.hpp"
#include "tollkit/toll.hpp"

using namespace tollkit;

namespace {

graph p(int n) { return family(graph_family::path, n); }
graph c(int n) { return family(graph_family::cycle, n); }
graph paw() { return family(graph_family::paw_pendant, 4); }

// smallest t-convex superset by intersecting every t-convex superset
vertex_set brute_force_hull(const toll_interval_table& t, const vertex_set& s) {
    const int n = t.n();
    vertex_set best = vertex_set::full(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        vertex_set cand(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) cand.set(v);
        if (!s.is_subset_of(cand)) continue;
        if (t.closure(cand) == cand) best &= cand;
    }
    return best;
}

} // namespace

TEST_CASE("tolled walk recognition") {
    graph g = p(4);
    CHECK(is_tolled_walk(g, {0, 1, 2, 3}, 0, 3));
    CHECK_FALSE(is_tolled_walk(g, {0, 1, 2, 1, 2, 3}, 0, 3)); // re-enters N(0)

    graph c4 = c(4);
    CHECK(is_tolled_walk(c4, {0, 1, 2}, 0, 2));
    CHECK(is_tolled_walk(c4, {0, 3, 2}, 0, 2));

    // degenerate conventions
    CHECK(is_tolled_walk(g, {2}, 2, 2));
    CHECK_FALSE(is_tolled_walk(g, {2, 3, 2}, 2, 2));
    CHECK(is_tolled_walk(g, {0, 1}, 0, 1));
    CHECK_FALSE(is_tolled_walk(g, {1, 0, 1, 2}, 1, 2)); // adjacent pair: only u,v

    CHECK_THROWS_AS(is_tolled_walk(g, {0, 1, 2}, 0, 3), error);  // endpoint mismatch
    CHECK_THROWS_AS(is_tolled_walk(g, {0, 2, 3}, 0, 3), error);  // not a walk
    CHECK_THROWS_AS(is_tolled_walk(g, {}, 0, 0), error);
    CHECK_THROWS_AS(is_tolled_walk(g, {0, 1, 7}, 0, 7), error);  // out of range
    CHECK(is_walk(g, {0, 1, 2, 1}));
    CHECK_FALSE(is_walk(g, {0, 2}));
}

TEST_CASE("toll intervals on named instances") {
    CHECK(toll_interval(p(4), 0, 3) == vertex_set::full(4));
    CHECK(toll_interval(p(4), 1, 3) == vertex_set::of(4, {1, 2, 3}));
    CHECK(toll_interval(p(4), 0, 2) == vertex_set::of(4, {0, 1, 2}));
    CHECK(toll_interval(p(3), 0, 2) == vertex_set::full(3));
    CHECK(toll_interval(c(5), 0, 2) == vertex_set::full(5));
    CHECK(toll_interval(paw(), 0, 3) == vertex_set::of(4, {0, 2, 3}));

    // degenerate contracts
    graph g = paw();
    for (int v = 0; v < 4; ++v) CHECK(toll_interval(g, v, v) == vertex_set::single(4, v));
    CHECK(toll_interval(g, 0, 1) == vertex_set::of(4, {0, 1}));

    CHECK_THROWS_AS(toll_interval(g, 0, 4), error);
    graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(toll_interval(split, 0, 2), disconnected_error);
    CHECK_THROWS_AS(toll_interval_oracle(split, 0, 2), disconnected_error);
}

TEST_CASE("fast interval equals the state-space oracle, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const graph& g : enumerate_connected(n).graphs)
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v) {
                    vertex_set fast = toll_interval(g, u, v);
                    vertex_set slow = toll_interval_oracle(g, u, v);
                    REQUIRE_MESSAGE(fast == slow, "g=", emit_graph6(g), " pair=(", u, ",", v,
                                    ") fast=", fast.to_string(), " oracle=", slow.to_string());
                }
}

TEST_CASE("fast interval equals the oracle on sample products") {
    std::vector<product_graph> ps;
    ps.push_back(strong_product(p(3), p(3)));
    ps.push_back(strong_product(paw(), paw()));
    ps.push_back(strong_product(p(4), c(5)));
    ps.push_back(cartesian_product(p(3), c(4)));
    ps.push_back(lexicographic_product(paw(), p(3)));
    for (const product_graph& q : ps) {
        const graph& g = q.graph();
        for (int u = 0; u < g.n(); ++u)
            for (int v = u; v < g.n(); ++v)
                REQUIRE(toll_interval(g, u, v) == toll_interval_oracle(g, u, v));
    }
}

TEST_CASE("interval endpoints and symmetry") {
    for (const graph& g : enumerate_connected(5).graphs)
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v) {
                vertex_set t = toll_interval(g, u, v);
                CHECK(t.test(u));
                CHECK(t.test(v));
                CHECK(t == toll_interval(g, v, u));
                if (u != v && g.adjacent(u, v)) CHECK(t.count() == 2);
            }
}

TEST_CASE("membership certificates replay") {
    for (int n = 2; n <= 5; ++n)
        for (const graph& g : enumerate_connected(n).graphs)
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v) {
                    vertex_set t = toll_interval(g, u, v);
                    for (int x = 0; x < n; ++x) {
                        auto cert = certify_toll_membership(g, u, v, x);
                        REQUIRE(cert.has_value() == t.test(x));
                        if (cert) {
                            CHECK(cert->member == x);
                            CHECK(is_tolled_walk(g, cert->witness, u, v));
                            CHECK(std::count(cert->witness.begin(), cert->witness.end(), x) > 0);
                        }
                    }
                }
}

TEST_CASE("toll closure and convexity") {
    CHECK(toll_closure(p(4), vertex_set::of(4, {0, 3})) == vertex_set::full(4));
    CHECK(toll_closure(p(4), vertex_set::single(4, 2)) == vertex_set::single(4, 2));
    CHECK(toll_closure(paw(), vertex_set::of(4, {0, 1})) == vertex_set::of(4, {0, 1}));

    CHECK(is_toll_convex(p(4), vertex_set::full(4)));
    CHECK_FALSE(is_toll_convex(p(4), vertex_set::of(4, {0, 3})));
    CHECK(is_toll_convex(p(4), vertex_set::of(4, {0, 1})));
    CHECK(is_toll_convex(p(4), vertex_set(4))); // empty set

    CHECK_THROWS_AS(toll_closure(p(4), vertex_set(5)), error); // width mismatch
}

TEST_CASE("closure monotonicity") {
    std::mt19937 rng(4242);
    for (const graph& g : enumerate_connected(5).graphs)
        for (int round = 0; round < 10; ++round) {
            vertex_set s(5), t(5);
            for (int v = 0; v < 5; ++v) {
                if (rng() % 3 == 0) s.set(v);
                if (rng() % 2 == 0) t.set(v);
            }
            t |= s; // force s subset of t
            CHECK(s.is_subset_of(toll_closure(g, s)));
            CHECK(toll_closure(g, s).is_subset_of(toll_closure(g, t)));
        }
}

TEST_CASE("hull traces") {
    hull_trace tr = toll_hull(p(4), vertex_set::of(4, {0, 3}));
    REQUIRE(tr.stages.size() == 2);
    CHECK(tr.stages[0] == vertex_set::of(4, {0, 3}));
    CHECK(tr.terminal() == vertex_set::full(4));
    CHECK(tr.reached_fixpoint);

    hull_trace single = toll_hull(p(4), vertex_set::single(4, 1));
    CHECK(single.stages.size() == 1);
    CHECK(single.terminal() == vertex_set::single(4, 1));

    product_graph fig = strong_product(paw(), paw());
    hull_trace prod = toll_hull(fig.graph(),
                                vertex_set::of(16, {fig.encode(0, 0), fig.encode(3, 3)}));
    CHECK(prod.terminal() == vertex_set::full(16));

    // stages strictly increase and the terminal stage is t-convex
    for (const auto& t : {tr, single, prod}) {
        for (std::size_t i = 0; i + 1 < t.stages.size(); ++i) {
            CHECK(t.stages[i].is_subset_of(t.stages[i + 1]));
            CHECK(t.stages[i].count() < t.stages[i + 1].count());
        }
    }
    CHECK(is_toll_convex(p(4), tr.terminal()));
}

TEST_CASE("hull equals the minimum t-convex superset, n <= 6") {
    std::mt19937 rng(20240818);
    for (int n = 2; n <= 6; ++n)
        for (const graph& g : enumerate_connected(n).graphs) {
            toll_interval_table table(g);
            if (n <= 4) {
                // every seed set
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    vertex_set s(n);
                    for (int v = 0; v < n; ++v)
                        if ((mask >> v) & 1) s.set(v);
                    CHECK(toll_hull(g, s).terminal() == brute_force_hull(table, s));
                }
            } else {
                for (int round = 0; round < 12; ++round) {
                    vertex_set s(n);
                    for (int v = 0; v < n; ++v)
                        if (rng() % 3 == 0) s.set(v);
                    CHECK(toll_hull(g, s).terminal() == brute_force_hull(table, s));
                }
            }
        }
}

TEST_CASE("extreme vertices on named instances") {
    CHECK(extreme_vertices(p(4)) == vertex_set::of(4, {0, 3}));
    CHECK(extreme_vertices(c(5)).none());
    CHECK(extreme_vertices(paw()) == vertex_set::of(4, {0, 1, 3}));
    CHECK(is_extreme_vertex(p(4), 0));
    CHECK_FALSE(is_extreme_vertex(p(4), 1));

    product_graph fig = strong_product(paw(), paw());
    CHECK(extreme_vertices(fig.graph()).none());
}

TEST_CASE("extreme vertices imply simplicial, converse fails somewhere") {
    bool converse_fails = false;
    for (int n = 2; n <= 7; ++n)
        for (const graph& g : enumerate_connected(n).graphs) {
            vertex_set ext = extreme_vertices(g);
            for (int v = 0; v < n; ++v) {
                if (ext.test(v)) CHECK(is_simplicial(g, v));
                if (is_simplicial(g, v) && !ext.test(v)) converse_fails = true;
                if (n <= 6) CHECK(is_extreme_vertex(g, v) == ext.test(v));
            }
        }
    CHECK(converse_fails);
}

TEST_CASE("geodesic and monophonic intervals") {
    CHECK(geodesic_interval(p(4), 0, 3) == vertex_set::full(4));
    CHECK(monophonic_interval(p(4), 0, 3) == vertex_set::full(4));

    // on C5 the far arc is an induced path, so M covers everything while
    // the geodesic interval stays on the near arc
    CHECK(geodesic_interval(c(5), 0, 2) == vertex_set::of(5, {0, 1, 2}));
    CHECK(monophonic_interval(c(5), 0, 2) == vertex_set::full(5));
    CHECK(toll_interval(c(5), 0, 2) == vertex_set::full(5));

    // adjacent pairs and degenerate input
    CHECK(geodesic_interval(paw(), 0, 1) == vertex_set::of(4, {0, 1}));
    CHECK(monophonic_interval(paw(), 0, 1) == vertex_set::of(4, {0, 1}));
    CHECK(monophonic_interval(paw(), 2, 2) == vertex_set::single(4, 2));

    // strict gap between monophonic and toll: chair graph, leaf off the middle
    graph chair(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
    CHECK_FALSE(monophonic_interval(chair, 0, 5).test(3));
    CHECK(toll_interval(chair, 0, 5) == vertex_set::full(6));

    CHECK_THROWS_AS(monophonic_interval(graph(11, {{0, 1}}), 0, 1), error); // size guard
}

TEST_CASE("inclusion chain I subset M subset T, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const graph& g : enumerate_connected(n).graphs)
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v) {
                    vertex_set i = geodesic_interval(g, u, v);
                    vertex_set m = monophonic_interval(g, u, v);
                    vertex_set t = toll_interval(g, u, v);
                    CHECK(i.is_subset_of(m));
                    CHECK(m.is_subset_of(t));
                }
}

TEST_CASE("interval table matches per-pair computation") {
    graph g = strong_product(p(3), paw()).graph();
    toll_interval_table table(g);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) CHECK(table.at(u, v) == toll_interval(g, u, v));
    vertex_set s = vertex_set::of(g.n(), {0, 5, 11});
    CHECK(table.closure(s) == toll_closure(g, s));
}
