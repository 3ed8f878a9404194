#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tollkit/graph.hpp"

namespace tollkit {

enum class product_kind { strong, cartesian, lexicographic };

inline const char* product_kind_name(product_kind k) {
    switch (k) {
        case product_kind::strong: return "strong";
        case product_kind::cartesian: return "cartesian";
        case product_kind::lexicographic: return "lexicographic";
    }
    return "?";
}

// A two-factor graph product with the fixed pair encoding (g,h) -> g*nH + h.
// The product adjacency is materialized into an ordinary graph; factor sizes
// and the encoding are kept for coordinate bookkeeping.
class product_graph {
public:
    product_graph(product_kind kind, const tollkit::graph& left, const tollkit::graph& right)
        : kind_(kind), ng_(left.n()), nh_(right.n()), g_(build(kind, left, right)) {}

    product_kind kind() const { return kind_; }
    int ng() const { return ng_; }
    int nh() const { return nh_; }
    const tollkit::graph& graph() const { return g_; }

    int encode(int g, int h) const {
        if (g < 0 || g >= ng_ || h < 0 || h >= nh_)
            throw error("product encode: coordinate out of range (" + std::to_string(g) + "," +
                        std::to_string(h) + ")");
        return g * nh_ + h;
    }

    std::pair<int, int> decode(int v) const {
        if (v < 0 || v >= ng_ * nh_)
            throw error("product decode: index " + std::to_string(v) + " out of range");
        return {v / nh_, v % nh_};
    }

    // G^h = {(g,h) : g in V(G)} — the copy of G at height h.
    vertex_set g_layer(int h) const {
        if (h < 0 || h >= nh_) throw error("g_layer: index out of range");
        vertex_set s(ng_ * nh_);
        for (int g = 0; g < ng_; ++g) s.set(g * nh_ + h);
        return s;
    }

    // ^gH = {(g,h) : h in V(H)}.
    vertex_set h_layer(int g) const {
        if (g < 0 || g >= ng_) throw error("h_layer: index out of range");
        vertex_set s(ng_ * nh_);
        for (int h = 0; h < nh_; ++h) s.set(g * nh_ + h);
        return s;
    }

    // "(g,h)" using factor coordinates.
    std::string vertex_name(int v) const {
        auto [g, h] = decode(v);
        return "(" + std::to_string(g) + "," + std::to_string(h) + ")";
    }

    std::string set_name(const vertex_set& s) const {
        std::string out = "{";
        bool sep = false;
        s.for_each([&](int v) {
            if (sep) out += ',';
            out += vertex_name(v);
            sep = true;
        });
        out += '}';
        return out;
    }

private:
    static tollkit::graph build(product_kind kind, const tollkit::graph& left,
                                const tollkit::graph& right) {
        const int ng = left.n(), nh = right.n();
        std::vector<std::pair<int, int>> edges;
        for (int g1 = 0; g1 < ng; ++g1)
            for (int h1 = 0; h1 < nh; ++h1)
                for (int g2 = g1; g2 < ng; ++g2)
                    for (int h2 = (g2 == g1 ? h1 + 1 : 0); h2 < nh; ++h2) {
                        const bool ge = g1 == g2, he = h1 == h2;
                        const bool ga = !ge && left.adjacent(g1, g2);
                        const bool ha = !he && right.adjacent(h1, h2);
                        bool adj = false;
                        switch (kind) {
                            case product_kind::strong:
                                adj = (ga && he) || (ge && ha) || (ga && ha);
                                break;
                            case product_kind::cartesian:
                                adj = (ga && he) || (ge && ha);
                                break;
                            case product_kind::lexicographic:
                                adj = ga || (ge && ha);
                                break;
                        }
                        if (adj) edges.emplace_back(g1 * nh + h1, g2 * nh + h2);
                    }
        std::string label = std::string(product_kind_name(kind)) + "(" + left.label() + "," +
                            right.label() + ")";
        return tollkit::graph(ng * nh, edges, std::move(label));
    }

    product_kind kind_;
    int ng_, nh_;
    tollkit::graph g_;
};

inline product_graph strong_product(const graph& g, const graph& h) {
    return product_graph(product_kind::strong, g, h);
}

inline product_graph cartesian_product(const graph& g, const graph& h) {
    return product_graph(product_kind::cartesian, g, h);
}

inline product_graph lexicographic_product(const graph& g, const graph& h) {
    return product_graph(product_kind::lexicographic, g, h);
}

// G x K_n and G o K_n coincide edge-for-edge under the shared encoding; this
// is the executable form of that identity.
inline bool strong_equals_lex_on_complete(const graph& g, int n) {
    if (n < 2) throw error("strong_equals_lex_on_complete: n >= 2 required");
    graph kn = family(graph_family::complete, n);
    return strong_product(g, kn).graph() == lexicographic_product(g, kn).graph();
}

} // namespace tollkit
