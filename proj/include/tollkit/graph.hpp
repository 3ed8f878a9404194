#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "tollkit/errors.hpp"
#include "tollkit/vertex_set.hpp"

namespace tollkit {

// Immutable finite simple graph on dense vertex indices 0..n-1 with one
// neighbor bitset per vertex. Adjacency is symmetric and irreflexive by
// construction; multi-edges cannot be represented. The optional label is a
// cosmetic tag ("path:4", a graph6 line, ...) and never takes part in
// equality.
class graph {
public:
    graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label = {})
        : n_(n), label_(std::move(label)) {
        if (n < 1) throw error("graph: vertex count must be at least 1, got " + std::to_string(n));
        adj_.assign(static_cast<std::size_t>(n), vertex_set(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw error("graph: edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw error("graph: loop edge at vertex " + std::to_string(u));
            adj_[static_cast<std::size_t>(u)].set(v);
            adj_[static_cast<std::size_t>(v)].set(u);
        }
    }

    int n() const { return n_; }

    const std::string& label() const { return label_; }

    bool adjacent(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    // N(v): open neighborhood, excludes v.
    const vertex_set& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // N[v] = N(v) + v.
    vertex_set closed_neighborhood(int v) const {
        check_vertex(v);
        vertex_set s = adj_[static_cast<std::size_t>(v)];
        s.set(v);
        return s;
    }

    int degree(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)].count();
    }

    long edge_count() const {
        long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw error("graph: vertex index " + std::to_string(v) + " out of range (n=" +
                        std::to_string(n_) + ")");
    }

    // Structural equality; labels are ignored.
    friend bool operator==(const graph& a, const graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    std::vector<vertex_set> adj_;
    std::string label_;
};

inline graph new_graph(int n, const std::vector<std::pair<int, int>>& edges,
                       std::string label = {}) {
    return graph(n, edges, std::move(label));
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

// All-pairs hop distances; `unreachable` marks pairs in different components.
class distance_matrix {
public:
    static constexpr int unreachable = -1;

    explicit distance_matrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, unreachable) {}

    int n() const { return n_; }

    int at(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return d_[static_cast<std::size_t>(u) * n_ + v];
    }

    bool reachable(int u, int v) const { return at(u, v) != unreachable; }

    int& slot(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_;
    std::vector<int> d_;
};

// BFS hop distances from `src`; unreachable vertices get distance_matrix::unreachable.
inline std::vector<int> bfs_distances(const graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(static_cast<std::size_t>(g.n()), distance_matrix::unreachable);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](int w) {
            if (dist[static_cast<std::size_t>(w)] == distance_matrix::unreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

inline distance_matrix distances(const graph& g) {
    distance_matrix m(g.n());
    for (int u = 0; u < g.n(); ++u) {
        auto row = bfs_distances(g, u);
        for (int v = 0; v < g.n(); ++v) m.slot(u, v) = row[static_cast<std::size_t>(v)];
    }
    return m;
}

inline bool is_connected(const graph& g) {
    auto dist = bfs_distances(g, 0);
    for (int v : dist)
        if (v == distance_matrix::unreachable) return false;
    return true;
}

inline void require_connected(const graph& g, const char* op) {
    if (!is_connected(g))
        throw disconnected_error(std::string(op) + ": graph is disconnected");
}

// e(v) = max distance from v. Connected graphs only.
inline int eccentricity(const graph& g, int v) {
    g.check_vertex(v);
    auto dist = bfs_distances(g, v);
    int e = 0;
    for (int d : dist) {
        if (d == distance_matrix::unreachable)
            throw disconnected_error("eccentricity: graph is disconnected");
        if (d > e) e = d;
    }
    return e;
}

// ecc(v): vertices at distance exactly e(v) from v.
inline vertex_set eccentric_vertices(const graph& g, int v) {
    int e = eccentricity(g, v);
    auto dist = bfs_distances(g, v);
    vertex_set s(g.n());
    for (int x = 0; x < g.n(); ++x)
        if (dist[static_cast<std::size_t>(x)] == e) s.set(x);
    return s;
}

inline int diameter(const graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

// Lexicographically least pair (u,v), u < v, with d(u,v) = diam(g).
// For K1 there is no pair; callers guard n >= 2.
inline std::pair<int, int> diametral_pair(const graph& g) {
    require_connected(g, "diametral_pair");
    if (g.n() < 2) throw error("diametral_pair: need at least two vertices");
    distance_matrix m = distances(g);
    int diam = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) diam = std::max(diam, m.at(u, v));
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (m.at(u, v) == diam) return {u, v};
    return {0, 1}; // unreachable
}

// ---------------------------------------------------------------------------
// Local structure
// ---------------------------------------------------------------------------

inline bool is_complete(const graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != g.n() - 1) return false;
    return true;
}

// v is simplicial iff G[N[v]] is complete, i.e. the neighbors of v are
// pairwise adjacent.
inline bool is_simplicial(const graph& g, int v) {
    g.check_vertex(v);
    const vertex_set& nb = g.neighbors(v);
    bool ok = true;
    nb.for_each([&](int u) {
        if (!ok) return;
        if (!nb.is_subset_of(g.closed_neighborhood(u))) ok = false;
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

enum class graph_family { path, cycle, complete, paw_pendant };

inline const char* family_name(graph_family k) {
    switch (k) {
        case graph_family::path: return "path";
        case graph_family::cycle: return "cycle";
        case graph_family::complete: return "complete";
        case graph_family::paw_pendant: return "paw_pendant";
    }
    return "?";
}

// path: 0-1-...-(n-1), n >= 2
// cycle: n >= 3
// complete: n >= 2
// paw_pendant: the triangle {0,1,2} plus the pendant 3 attached to 2; fixed n = 4.
inline graph family(graph_family kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case graph_family::path:
            if (n < 2) throw error("family: path requires n >= 2");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case graph_family::cycle:
            if (n < 3) throw error("family: cycle requires n >= 3");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case graph_family::complete:
            if (n < 2) throw error("family: complete requires n >= 2");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case graph_family::paw_pendant:
            if (n != 4) throw error("family: paw_pendant is fixed at n = 4");
            edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
            break;
    }
    return graph(n, edges, std::string(family_name(kind)) + ":" + std::to_string(n));
}

} // namespace tollkit
