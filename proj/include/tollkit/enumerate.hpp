#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "tollkit/graph.hpp"
#include "tollkit/io.hpp"

namespace tollkit {

inline constexpr int max_enumeration_vertices = 7;

namespace detail {

// Upper-triangle edge slot in column-major order, the same order graph6 uses:
// (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) ...
inline int edge_slot(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline std::uint64_t graph_mask(const graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_slot(u, v);
    return mask;
}

inline graph mask_graph(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> edge_slot(i, j)) & 1) edges.emplace_back(i, j);
    return graph(n, edges);
}

// Every permutation of 0..n-1 expressed as a map over edge slots.
inline const std::vector<std::vector<int>>& edge_slot_permutations(int n) {
    static std::vector<std::vector<std::vector<int>>> cache(max_enumeration_vertices + 1);
    auto& tables = cache[static_cast<std::size_t>(n)];
    if (tables.empty()) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        const int slots = n * (n - 1) / 2;
        do {
            std::vector<int> table(static_cast<std::size_t>(slots));
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    table[static_cast<std::size_t>(edge_slot(i, j))] =
                        edge_slot(perm[static_cast<std::size_t>(i)],
                                  perm[static_cast<std::size_t>(j)]);
            tables.push_back(std::move(table));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return tables;
}

// Minimum edge mask over all relabelings; two graphs on n vertices are
// isomorphic iff their canonical masks agree.
inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::uint64_t best = ~std::uint64_t{0};
    const int slots = n * (n - 1) / 2;
    for (const auto& table : edge_slot_permutations(n)) {
        std::uint64_t m = 0;
        for (int s = 0; s < slots; ++s)
            if ((mask >> s) & 1) m |= std::uint64_t{1} << table[static_cast<std::size_t>(s)];
        if (m < best) best = m;
    }
    return best;
}

// Canonical masks of all connected graphs on n vertices, sorted ascending.
// Built by augmentation: every connected graph on k+1 vertices arises from a
// connected graph on k vertices by attaching one vertex to a nonempty
// neighbor subset (delete a non-cut vertex to see this).
inline const std::vector<std::uint64_t>& connected_canonical_masks(int n) {
    static std::vector<std::vector<std::uint64_t>> cache(max_enumeration_vertices + 1);
    auto& masks = cache[static_cast<std::size_t>(n)];
    if (!masks.empty()) return masks;
    if (n == 2) {
        masks = {1}; // K2
        return masks;
    }
    const auto& parents = connected_canonical_masks(n - 1);
    std::set<std::uint64_t> out;
    const int newest = n - 1;
    for (std::uint64_t parent : parents) {
        for (unsigned att = 1; att < (1u << newest); ++att) {
            std::uint64_t mask = parent;
            for (int i = 0; i < newest; ++i)
                if ((att >> i) & 1) mask |= std::uint64_t{1} << edge_slot(i, newest);
            out.insert(canonical_mask(n, mask));
        }
    }
    masks.assign(out.begin(), out.end());
    return masks;
}

} // namespace detail

// All connected graphs on n labeled vertices up to isomorphism, 2 <= n <= 7,
// in a fixed deterministic order (ascending canonical edge mask). The
// complete graph is dropped when skip_complete is set.
inline corpus enumerate_connected(int n, bool skip_complete = false) {
    if (n < 2 || n > max_enumeration_vertices)
        throw error("enumerate_connected: n must be in 2.." +
                    std::to_string(max_enumeration_vertices) + ", got " + std::to_string(n));
    corpus c;
    c.source = std::string("connected:n=") + std::to_string(n) +
               (skip_complete ? ":skip_complete" : "");
    const std::uint64_t complete = (std::uint64_t{1} << (n * (n - 1) / 2)) - 1;
    for (std::uint64_t mask : detail::connected_canonical_masks(n)) {
        if (skip_complete && mask == complete) continue;
        c.graphs.push_back(detail::mask_graph(n, mask));
    }
    return c;
}

} // namespace tollkit
