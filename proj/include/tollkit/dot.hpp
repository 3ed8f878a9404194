#pragma once

#include <string>

#include "tollkit/products.hpp"

namespace tollkit {

// Graphviz rendering options. Highlighted vertices are filled gold, accented
// ones (interval endpoints, witnesses) orange; empty sets disable a layer.
struct dot_options {
    vertex_set highlight;
    vertex_set accent;
    const product_graph* coordinates = nullptr; // label vertices as (g,h)
};

inline std::string to_dot(const graph& g, const dot_options& opt = {}) {
    auto in = [&](const vertex_set& s, int v) { return s.width() == g.n() && s.test(v); };
    std::string out = "graph tollkit {\n";
    out += "  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < g.n(); ++v) {
        out += "  " + std::to_string(v) + " [label=\"";
        out += opt.coordinates ? opt.coordinates->vertex_name(v) : std::to_string(v);
        out += "\"";
        if (in(opt.accent, v))
            out += ", style=filled, fillcolor=orange";
        else if (in(opt.highlight, v))
            out += ", style=filled, fillcolor=gold";
        out += "];\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace tollkit
