#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tollkit/products.hpp"
#include "tollkit/toll.hpp"

namespace tollkit {

// Size guards for the exact searches: unbounded-size search explores up to
// 2^n candidate sets, bounded-size search is meant for products where the
// answer is known to be tiny.
inline constexpr int max_unbounded_search_vertices = 16;
inline constexpr int max_bounded_search_vertices = 30;

struct invariant_result {
    int value = 0;
    vertex_set witness;
    std::uint64_t explored = 0; // candidate sets examined
};

// Extreme vertices read off an existing all-pairs interval table.
inline vertex_set extreme_vertices(const toll_interval_table& t) {
    vertex_set interior(t.n());
    for (int a = 0; a < t.n(); ++a)
        for (int b = a + 1; b < t.n(); ++b) {
            vertex_set x = t.at(a, b);
            x.reset(a);
            x.reset(b);
            interior |= x;
        }
    return interior.complement();
}

namespace detail {

// First candidate set (by ascending cardinality, then lexicographic order)
// containing `forced` for which covers() holds, with sizes in [lo, hi].
// Every subset enumerated counts as explored.
template <class Covers>
std::optional<invariant_result> min_covering_set(int n, const vertex_set& forced, int lo, int hi,
                                                 Covers&& covers) {
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
        if (!forced.test(v)) pool.push_back(v);
    const int base = forced.count();
    std::uint64_t explored = 0;

    for (int k = std::max(lo, base); k <= hi && k <= n; ++k) {
        const int pick = k - base;
        if (pick > static_cast<int>(pool.size())) break;
        std::vector<int> idx(static_cast<std::size_t>(pick));
        for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            vertex_set candidate = forced;
            for (int i : idx) candidate.set(pool[static_cast<std::size_t>(i)]);
            ++explored;
            if (covers(candidate)) return invariant_result{k, candidate, explored};
            // next lexicographic combination
            int i = pick - 1;
            while (i >= 0 &&
                   idx[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - pick + i)
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < pick; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

inline void check_invariant_input(const graph& g, const char* op, int max_n) {
    require_connected(g, op);
    if (g.n() < 2) throw error(std::string(op) + ": graph must be non-trivial (n >= 2)");
    if (g.n() > max_n)
        throw error(std::string(op) + ": n = " + std::to_string(g.n()) + " exceeds the " +
                    std::to_string(max_n) + "-vertex search guard");
}

} // namespace detail

// Smallest S with T[S] = V over an existing table. Extreme vertices are
// forced into every candidate: no interval between other vertices ever
// covers them.
inline std::optional<invariant_result> min_toll_set(const toll_interval_table& table,
                                                    int max_size) {
    const vertex_set full = vertex_set::full(table.n());
    const vertex_set forced = extreme_vertices(table);
    return detail::min_covering_set(table.n(), forced, 2, max_size,
                                    [&](const vertex_set& s) { return table.closure(s) == full; });
}

// Smallest S whose iterated closure reaches V.
inline std::optional<invariant_result> min_hull_set(const toll_interval_table& table,
                                                    int max_size) {
    const vertex_set full = vertex_set::full(table.n());
    const vertex_set forced = extreme_vertices(table);
    auto hull_covers = [&](const vertex_set& s) {
        vertex_set cur = s;
        for (;;) {
            vertex_set next = table.closure(cur);
            if (next == cur) return cur == full;
            cur = std::move(next);
        }
    };
    return detail::min_covering_set(table.n(), forced, 2, max_size, hull_covers);
}

inline invariant_result toll_number(const graph& g) {
    detail::check_invariant_input(g, "toll_number", max_unbounded_search_vertices);
    toll_interval_table table(g);
    return *min_toll_set(table, g.n()); // V itself always covers
}

inline std::optional<invariant_result> toll_number_bounded(const graph& g, int max_size) {
    detail::check_invariant_input(g, "toll_number_bounded", max_bounded_search_vertices);
    toll_interval_table table(g);
    return min_toll_set(table, max_size);
}

inline invariant_result t_hull_number(const graph& g) {
    detail::check_invariant_input(g, "t_hull_number", max_unbounded_search_vertices);
    toll_interval_table table(g);
    return *min_hull_set(table, g.n());
}

inline std::optional<invariant_result> t_hull_number_bounded(const graph& g, int max_size) {
    detail::check_invariant_input(g, "t_hull_number_bounded", max_bounded_search_vertices);
    toll_interval_table table(g);
    return min_hull_set(table, max_size);
}

// ---------------------------------------------------------------------------
// Geodesic counterparts (comparison instruments)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<vertex_set> geodesic_rows(const graph& g) {
    distance_matrix d = distances(g);
    std::vector<vertex_set> rows(static_cast<std::size_t>(g.n()) * g.n(), vertex_set(g.n()));
    for (int u = 0; u < g.n(); ++u)
        for (int v = u; v < g.n(); ++v) {
            vertex_set s(g.n());
            for (int x = 0; x < g.n(); ++x)
                if (d.at(u, x) + d.at(x, v) == d.at(u, v)) s.set(x);
            rows[static_cast<std::size_t>(u) * g.n() + v] = s;
            rows[static_cast<std::size_t>(v) * g.n() + u] = s;
        }
    return rows;
}

inline vertex_set rows_closure(const std::vector<vertex_set>& rows, int n, const vertex_set& s) {
    vertex_set out = s;
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            out |= rows[static_cast<std::size_t>(members[i]) * n + members[j]];
    return out;
}

} // namespace detail

inline invariant_result geodetic_number(const graph& g) {
    detail::check_invariant_input(g, "geodetic_number", max_unbounded_search_vertices);
    auto rows = detail::geodesic_rows(g);
    const vertex_set full = vertex_set::full(g.n());
    return *detail::min_covering_set(g.n(), vertex_set(g.n()), 2, g.n(), [&](const vertex_set& s) {
        return detail::rows_closure(rows, g.n(), s) == full;
    });
}

inline invariant_result hull_number(const graph& g) {
    detail::check_invariant_input(g, "hull_number", max_unbounded_search_vertices);
    auto rows = detail::geodesic_rows(g);
    const vertex_set full = vertex_set::full(g.n());
    auto covers = [&](const vertex_set& s) {
        vertex_set cur = s;
        for (;;) {
            vertex_set next = detail::rows_closure(rows, g.n(), cur);
            if (next == cur) return cur == full;
            cur = std::move(next);
        }
    };
    return *detail::min_covering_set(g.n(), vertex_set(g.n()), 2, g.n(), covers);
}

// ---------------------------------------------------------------------------
// Toll-number-2 witness predicate for strong products
// ---------------------------------------------------------------------------

// Some neighbor's closed neighborhood is contained in N[v]; such a neighbor
// can never be picked up by a toll interval ending at v's side.
inline bool has_dominated_neighbor(const graph& g, int v) {
    const vertex_set closed_v = g.closed_neighborhood(v);
    bool found = false;
    g.neighbors(v).for_each([&](int u) {
        if (!found && g.closed_neighborhood(u).is_subset_of(closed_v)) found = true;
    });
    return found;
}

// First (lexicographic) pair of distinct non-adjacent product vertices with
// no dominated neighbor on either side. Present iff tn(G x H) = 2 when the
// factors are connected and non-complete.
inline std::optional<std::pair<int, int>> tn2_witness_predicate(const product_graph& p) {
    const graph& g = p.graph();
    std::vector<char> dominated(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        dominated[static_cast<std::size_t>(v)] = has_dominated_neighbor(g, v) ? 1 : 0;
    for (int a = 0; a < g.n(); ++a) {
        if (dominated[static_cast<std::size_t>(a)]) continue;
        for (int b = a + 1; b < g.n(); ++b)
            if (!dominated[static_cast<std::size_t>(b)] && !g.adjacent(a, b))
                return std::make_pair(a, b);
    }
    return std::nullopt;
}

} // namespace tollkit
