#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "tollkit/graph.hpp"

namespace tollkit {

// A walk is a plain vertex sequence; validity against a graph is checked by
// is_walk. Tolled walks between u and v additionally satisfy: u is adjacent
// exactly to the second vertex, v exactly to the second-to-last. Degenerate
// conventions: [u] for u = v, [u,v] for an edge.
using walk = std::vector<int>;

inline bool is_walk(const graph& g, const walk& w) {
    if (w.empty()) return false;
    for (int x : w)
        if (x < 0 || x >= g.n()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!g.adjacent(w[i], w[i + 1])) return false;
    return true;
}

inline bool is_tolled_walk(const graph& g, const walk& w, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!is_walk(g, w)) throw error("is_tolled_walk: sequence is not a walk in this graph");
    if (w.front() != u || w.back() != v)
        throw error("is_tolled_walk: walk endpoints do not match the given pair");
    if (u == v) return w.size() == 1;
    if (g.adjacent(u, v)) return w.size() == 2;
    if (w.size() < 3) return false;
    const std::size_t last = w.size() - 2;
    for (std::size_t i = 1; i <= last; ++i) {
        if (g.adjacent(u, w[i]) != (i == 1)) return false;
        if (g.adjacent(v, w[i]) != (i == last)) return false;
    }
    return true;
}

namespace detail {

// Shared classification for a non-adjacent pair u,v:
//   first = N(u)            (possible second vertex of a tolled walk)
//   free  = V - N[u] - N[v] (possible strict interior)
//   last  = N(v) - N(u)     (possible second-to-last vertex)
// A vertex of N(u) & N(v) closes a three-vertex walk u,x,v and can play no
// other interior role, since N(u)-vertices appear only at position 1 and
// N(v)-vertices only at position k.
struct toll_frame {
    vertex_set first, common, free, last;

    toll_frame(const graph& g, int u, int v)
        : first(g.neighbors(u)),
          common(g.neighbors(u) & g.neighbors(v)),
          free((g.closed_neighborhood(u) | g.closed_neighborhood(v)).complement()),
          last(g.neighbors(v) - g.neighbors(u)) {}
};

// Fast route: vertices of free components that touch both sides are exactly
// the strict interiors realizable by some tolled walk, because a walk may
// enter a connected component anywhere, wander to any of its vertices, and
// leave anywhere.
inline vertex_set toll_interval_core(const graph& g, int u, int v) {
    if (u == v) return vertex_set::single(g.n(), u);
    vertex_set out = vertex_set::of(g.n(), {u, v});
    if (g.adjacent(u, v)) return out;

    toll_frame fr(g, u, v);
    out |= fr.common;
    const vertex_set side_a = fr.first - fr.common; // N(u) \ N(v)
    const vertex_set& side_b = fr.last;             // N(v) \ N(u)

    // union of components of G[free] adjacent to both side_a and side_b
    vertex_set qualifying(g.n());
    vertex_set pending = fr.free;
    while (pending.any()) {
        int seed = pending.first();
        vertex_set comp(g.n());
        std::deque<int> queue{seed};
        comp.set(seed);
        vertex_set boundary(g.n());
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            boundary |= g.neighbors(x);
            (g.neighbors(x) & fr.free).for_each([&](int y) {
                if (!comp.test(y)) {
                    comp.set(y);
                    queue.push_back(y);
                }
            });
        }
        pending -= comp;
        if (boundary.intersects(side_a) && boundary.intersects(side_b)) qualifying |= comp;
    }
    out |= qualifying;

    const vertex_set exit_a = qualifying | side_b;
    const vertex_set exit_b = qualifying | side_a;
    side_a.for_each([&](int a) {
        if (g.neighbors(a).intersects(exit_a)) out.set(a);
    });
    side_b.for_each([&](int b) {
        if (g.neighbors(b).intersects(exit_b)) out.set(b);
    });
    return out;
}

// Reference route: reachability over explicit walk states. Each vertex has a
// single possible role (first / free / last), so states are vertex-level; a
// vertex lies on a tolled walk iff some state of it is on a start->accept
// path. The state space is finite, so reachability decides membership with
// no bound on walk length.
struct toll_state_graph {
    static constexpr int role_first = 0, role_free = 1, role_last = 2;
    int n;
    std::vector<std::vector<int>> next;

    int start() const { return 3 * n; }
    int accept() const { return 3 * n + 1; }

    toll_state_graph(const graph& g, int u, int v)
        : n(g.n()), next(static_cast<std::size_t>(3 * g.n() + 2)) {
        toll_frame fr(g, u, v);
        fr.first.for_each([&](int a) {
            const int s = a * 3 + role_first;
            next[static_cast<std::size_t>(start())].push_back(s);
            if (fr.common.test(a)) {
                next[static_cast<std::size_t>(s)].push_back(accept());
                return;
            }
            g.neighbors(a).for_each([&](int w) {
                if (fr.free.test(w)) next[static_cast<std::size_t>(s)].push_back(w * 3 + role_free);
                else if (fr.last.test(w)) next[static_cast<std::size_t>(s)].push_back(w * 3 + role_last);
            });
        });
        fr.free.for_each([&](int f) {
            const int s = f * 3 + role_free;
            g.neighbors(f).for_each([&](int w) {
                if (fr.free.test(w)) next[static_cast<std::size_t>(s)].push_back(w * 3 + role_free);
                else if (fr.last.test(w)) next[static_cast<std::size_t>(s)].push_back(w * 3 + role_last);
            });
        });
        fr.last.for_each([&](int b) {
            next[static_cast<std::size_t>(b * 3 + role_last)].push_back(accept());
        });
    }

    // parents[s] = state from which s was first reached; -1 if unreached
    std::vector<int> forward_parents() const {
        std::vector<int> parent(next.size(), -1);
        std::deque<int> queue{start()};
        parent[static_cast<std::size_t>(start())] = start();
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            for (int t : next[static_cast<std::size_t>(s)])
                if (parent[static_cast<std::size_t>(t)] < 0) {
                    parent[static_cast<std::size_t>(t)] = s;
                    queue.push_back(t);
                }
        }
        return parent;
    }

    // toward[s] = successor of s on some path to accept; -1 if accept unreachable
    std::vector<int> accept_pointers() const {
        std::vector<std::vector<int>> rev(next.size());
        for (std::size_t s = 0; s < next.size(); ++s)
            for (int t : next[s]) rev[static_cast<std::size_t>(t)].push_back(static_cast<int>(s));
        std::vector<int> toward(next.size(), -1);
        std::deque<int> queue{accept()};
        toward[static_cast<std::size_t>(accept())] = accept();
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            for (int t : rev[static_cast<std::size_t>(s)])
                if (toward[static_cast<std::size_t>(t)] < 0) {
                    toward[static_cast<std::size_t>(t)] = s;
                    queue.push_back(t);
                }
        }
        return toward;
    }
};

inline walk shortest_path(const graph& g, int u, int v) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        g.neighbors(x).for_each([&](int y) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        });
    }
    walk w;
    for (int x = v; x != u; x = parent[static_cast<std::size_t>(x)]) w.push_back(x);
    w.push_back(u);
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace detail

// T(u,v): every vertex lying on some tolled u,v-walk. Computed by free-
// component decomposition; toll_interval_oracle is the independent reference
// for the same set.
inline vertex_set toll_interval(const graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    require_connected(g, "toll_interval");
    return detail::toll_interval_core(g, u, v);
}

inline vertex_set toll_interval_oracle(const graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    require_connected(g, "toll_interval_oracle");
    if (u == v) return vertex_set::single(g.n(), u);
    vertex_set out = vertex_set::of(g.n(), {u, v});
    if (g.adjacent(u, v)) return out;
    detail::toll_state_graph sg(g, u, v);
    auto fwd = sg.forward_parents();
    auto bwd = sg.accept_pointers();
    for (int x = 0; x < g.n(); ++x)
        for (int role = 0; role < 3; ++role) {
            int s = x * 3 + role;
            if (fwd[static_cast<std::size_t>(s)] >= 0 && bwd[static_cast<std::size_t>(s)] >= 0)
                out.set(x);
        }
    return out;
}

// Concrete tolled u,v-walk through x, when x is a member of T(u,v).
inline std::optional<walk> tolled_walk_through(const graph& g, int u, int v, int x) {
    g.check_vertex(u);
    g.check_vertex(v);
    g.check_vertex(x);
    require_connected(g, "tolled_walk_through");
    if (u == v) return x == u ? std::optional<walk>{walk{u}} : std::nullopt;
    if (g.adjacent(u, v))
        return (x == u || x == v) ? std::optional<walk>{walk{u, v}} : std::nullopt;
    if (x == u || x == v) return detail::shortest_path(g, u, v); // shortest paths are tolled

    detail::toll_state_graph sg(g, u, v);
    auto fwd = sg.forward_parents();
    auto bwd = sg.accept_pointers();
    for (int role = 0; role < 3; ++role) {
        int s = x * 3 + role;
        if (fwd[static_cast<std::size_t>(s)] < 0 || bwd[static_cast<std::size_t>(s)] < 0) continue;
        walk w{u};
        std::vector<int> head;
        for (int t = s; t != sg.start(); t = fwd[static_cast<std::size_t>(t)]) head.push_back(t / 3);
        w.insert(w.end(), head.rbegin(), head.rend());
        for (int t = bwd[static_cast<std::size_t>(s)]; t != sg.accept();
             t = bwd[static_cast<std::size_t>(t)])
            w.push_back(t / 3);
        w.push_back(v);
        return w;
    }
    return std::nullopt;
}

struct toll_certificate {
    int member;
    walk witness;
};

inline std::optional<toll_certificate> certify_toll_membership(const graph& g, int u, int v,
                                                               int x) {
    auto w = tolled_walk_through(g, u, v, x);
    if (!w) return std::nullopt;
    return toll_certificate{x, std::move(*w)};
}

// ---------------------------------------------------------------------------
// Closure, convexity, hull
// ---------------------------------------------------------------------------

// All-pairs toll intervals of one graph, computed once. Immutable afterwards,
// safe to share across threads.
class toll_interval_table {
public:
    explicit toll_interval_table(const graph& g) : n_(g.n()) {
        require_connected(g, "toll_interval_table");
        rows_.reserve(static_cast<std::size_t>(n_) * n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                rows_.push_back(u <= v ? detail::toll_interval_core(g, u, v)
                                       : rows_[static_cast<std::size_t>(v) * n_ + u]);
    }

    int n() const { return n_; }

    const vertex_set& at(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return rows_[static_cast<std::size_t>(u) * n_ + v];
    }

    // T[S] = union of T(u,v) over pairs from S.
    vertex_set closure(const vertex_set& s) const {
        vertex_set out = s;
        auto members = s.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                out |= at(members[i], members[j]);
        return out;
    }

private:
    int n_;
    std::vector<vertex_set> rows_;
};

inline vertex_set toll_closure(const graph& g, const vertex_set& s) {
    if (s.width() != g.n()) throw error("toll_closure: set width does not match graph");
    require_connected(g, "toll_closure");
    vertex_set out = s;
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            out |= detail::toll_interval_core(g, members[i], members[j]);
    return out;
}

inline bool is_toll_convex(const graph& g, const vertex_set& s) {
    return toll_closure(g, s) == s;
}

// Iterated closure up to the fixpoint. stages.front() is the input set and
// every stage is a strict superset of its predecessor; the terminal stage is
// t-convex.
struct hull_trace {
    std::vector<vertex_set> stages;
    bool reached_fixpoint = false;

    const vertex_set& terminal() const { return stages.back(); }
};

inline hull_trace toll_hull(const graph& g, const vertex_set& s) {
    if (s.width() != g.n()) throw error("toll_hull: set width does not match graph");
    require_connected(g, "toll_hull");
    hull_trace tr;
    tr.stages.push_back(s);
    for (;;) {
        vertex_set next = toll_closure(g, tr.stages.back());
        if (next == tr.stages.back()) {
            tr.reached_fixpoint = true;
            return tr;
        }
        tr.stages.push_back(std::move(next));
    }
}

// ---------------------------------------------------------------------------
// Extreme vertices
// ---------------------------------------------------------------------------

// v is extreme iff V-{v} is t-convex, i.e. v is interior to no toll interval
// between two other vertices.
inline bool is_extreme_vertex(const graph& g, int v) {
    g.check_vertex(v);
    require_connected(g, "is_extreme_vertex");
    for (int a = 0; a < g.n(); ++a) {
        if (a == v) continue;
        for (int b = a + 1; b < g.n(); ++b) {
            if (b == v) continue;
            if (detail::toll_interval_core(g, a, b).test(v)) return false;
        }
    }
    return true;
}

inline vertex_set extreme_vertices(const graph& g) {
    require_connected(g, "extreme_vertices");
    vertex_set interior(g.n());
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            vertex_set t = detail::toll_interval_core(g, a, b);
            t.reset(a);
            t.reset(b);
            interior |= t;
        }
    return interior.complement();
}

// ---------------------------------------------------------------------------
// Geodesic and monophonic intervals (cross-check instruments)
// ---------------------------------------------------------------------------

// I(u,v) = vertices on shortest u,v-paths.
inline vertex_set geodesic_interval(const graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    require_connected(g, "geodesic_interval");
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    const int duv = du[static_cast<std::size_t>(v)];
    vertex_set out(g.n());
    for (int x = 0; x < g.n(); ++x)
        if (du[static_cast<std::size_t>(x)] + dv[static_cast<std::size_t>(x)] == duv) out.set(x);
    return out;
}

inline constexpr int max_monophonic_vertices = 10;

// M(u,v) = vertices on induced u,v-paths, enumerated by DFS. Exponential in
// the worst case; guarded to small graphs.
inline vertex_set monophonic_interval(const graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    require_connected(g, "monophonic_interval");
    if (g.n() > max_monophonic_vertices)
        throw error("monophonic_interval: n > " + std::to_string(max_monophonic_vertices));
    if (u == v) return vertex_set::single(g.n(), u);

    vertex_set out(g.n());
    std::vector<int> path{u};
    vertex_set on_path = vertex_set::single(g.n(), u);

    auto dfs = [&](auto&& self, int last) -> void {
        if (last == v) {
            for (int x : path) out.set(x);
            return;
        }
        vertex_set before_last = on_path;
        before_last.reset(last);
        g.neighbors(last).for_each([&](int w) {
            if (on_path.test(w)) return;
            if (g.neighbors(w).intersects(before_last)) return; // chord: not induced
            path.push_back(w);
            on_path.set(w);
            self(self, w);
            path.pop_back();
            on_path.reset(w);
        });
    };
    dfs(dfs, u);
    return out;
}

} // namespace tollkit
