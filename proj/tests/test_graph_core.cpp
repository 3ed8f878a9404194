#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tollkit/enumerate.hpp"
#include "tollkit/graph.hpp"

using namespace tollkit;

namespace {

graph p4() { return family(graph_family::path, 4); }

// Figure-style paw: triangle 0,1,2 plus pendant 3 on 2.
graph paw() { return family(graph_family::paw_pendant, 4); }

// Floyd-Warshall reference for the BFS distance matrix.
std::vector<int> floyd_warshall(const graph& g) {
    const int n = g.n();
    const int inf = 1 << 20;
    std::vector<int> d(static_cast<std::size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0;
    for (auto [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u) * n + v] = 1;
        d[static_cast<std::size_t>(v) * n + u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i) * n + j] =
                    std::min(d[static_cast<std::size_t>(i) * n + j],
                             d[static_cast<std::size_t>(i) * n + k] +
                                 d[static_cast<std::size_t>(k) * n + j]);
    for (auto& x : d)
        if (x >= inf) x = distance_matrix::unreachable;
    return d;
}

void check_against_floyd_warshall(const graph& g) {
    auto ref = floyd_warshall(g);
    distance_matrix m = distances(g);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            CHECK(m.at(u, v) == ref[static_cast<std::size_t>(u) * g.n() + v]);
}

graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return graph(n, edges);
}

} // namespace

TEST_CASE("construction symmetrizes and deduplicates") {
    graph g(4, {{0, 1}, {1, 0}, {0, 1}, {2, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(graph(0, {}), error);
    CHECK_THROWS_AS(graph(3, {{0, 3}}), error);
    CHECK_THROWS_AS(graph(3, {{-1, 0}}), error);
    CHECK_THROWS_AS(graph(3, {{0, 1}, {0, 0}}), error); // loop edge
}

TEST_CASE("neighborhoods") {
    graph g = p4();
    CHECK(g.neighbors(1) == vertex_set::of(4, {0, 2}));
    CHECK(g.closed_neighborhood(1) == vertex_set::of(4, {0, 1, 2}));
    CHECK_THROWS_AS(g.neighbors(4), error);

    // vertex 2 of the paw is universal
    CHECK(paw().closed_neighborhood(2) == vertex_set::full(4));
    // N[0] = N[1] inside the triangle
    CHECK(paw().closed_neighborhood(0) == paw().closed_neighborhood(1));

    graph k4 = family(graph_family::complete, 4);
    CHECK(k4.closed_neighborhood(0) == vertex_set::full(4));
}

TEST_CASE("distances, diameter, eccentricity") {
    graph g = p4();
    CHECK(diameter(g) == 3);
    CHECK(eccentricity(g, 1) == 2);
    CHECK(eccentric_vertices(g, 1) == vertex_set::of(4, {3}));

    graph c5 = family(graph_family::cycle, 5);
    CHECK(diameter(c5) == 2);
    for (int v = 0; v < 5; ++v) CHECK(eccentric_vertices(c5, v).count() == 2);

    CHECK(diameter(paw()) == 2);
    CHECK(diametral_pair(paw()) == std::pair<int, int>{0, 3});

    graph two(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two));
    CHECK_THROWS_AS(eccentricity(two, 0), disconnected_error);
    CHECK_THROWS_AS(diameter(two), disconnected_error);
    // distances itself works on disconnected graphs
    CHECK(distances(two).at(0, 2) == distance_matrix::unreachable);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
    for (int n = 2; n <= 6; ++n)
        for (const graph& g : enumerate_connected(n).graphs) check_against_floyd_warshall(g);
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 7); // up to 8, possibly disconnected
        check_against_floyd_warshall(random_graph(n, 0.35, rng));
    }
}

TEST_CASE("family diameters") {
    for (int n = 2; n <= 12; ++n) CHECK(diameter(family(graph_family::path, n)) == n - 1);
    for (int n = 2; n <= 12; ++n) CHECK(diameter(family(graph_family::complete, n)) == 1);
    for (int n = 3; n <= 12; ++n) CHECK(diameter(family(graph_family::cycle, n)) == n / 2);
}

TEST_CASE("family preconditions") {
    CHECK_THROWS_AS(family(graph_family::cycle, 2), error);
    CHECK_THROWS_AS(family(graph_family::path, 1), error);
    CHECK_THROWS_AS(family(graph_family::paw_pendant, 5), error);
    CHECK(family(graph_family::paw_pendant, 4) ==
          graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
}

TEST_CASE("simplicial vertices") {
    graph g = p4();
    CHECK(is_simplicial(g, 0));
    CHECK_FALSE(is_simplicial(g, 1));
    CHECK_FALSE(is_simplicial(paw(), 2));
    CHECK(is_simplicial(paw(), 3));

    // brute-force pair definition on every small graph
    for (int n = 2; n <= 6; ++n)
        for (const graph& g2 : enumerate_connected(n).graphs)
            for (int v = 0; v < g2.n(); ++v) {
                bool expect = true;
                auto nb = g2.neighbors(v).to_vector();
                for (std::size_t i = 0; i < nb.size() && expect; ++i)
                    for (std::size_t j = i + 1; j < nb.size() && expect; ++j)
                        if (!g2.adjacent(nb[i], nb[j])) expect = false;
                CHECK(is_simplicial(g2, v) == expect);
            }
}

TEST_CASE("adjacency is symmetric and irreflexive on random graphs") {
    std::mt19937 rng(99);
    for (int round = 0; round < 40; ++round) {
        graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
        for (int u = 0; u < g.n(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.n(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

TEST_CASE("is_complete") {
    CHECK(is_complete(family(graph_family::complete, 5)));
    CHECK_FALSE(is_complete(p4()));
    CHECK(is_complete(graph(1, {})));
}
