#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tollkit/graph.hpp"

namespace tollkit {

// Parsed graphs are capped well above the supported product sizes; a graph6
// header past this is almost certainly garbage and would only burn memory.
inline constexpr int max_parse_vertices = 4096;

namespace detail {

inline int g6_char(char c, const char* what) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw parse_error(std::string("graph6: ") + what + ": byte out of range");
    return u - 63;
}

} // namespace detail

// Standard graph6 line: N(n) header, then the upper-triangle adjacency bits
// in column-major order ((0,1),(0,2),(1,2),(0,3),...), packed 6 per byte,
// MSB first, each byte offset by 63.
inline graph parse_graph6(std::string_view line) {
    // strip trailing CR/LF and the optional ">>graph6<<" prefix
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw parse_error("graph6: empty line");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = detail::g6_char(line[0], "header");
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) throw parse_error("graph6: truncated long-form header");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::g6_char(line[i], "header");
        pos = 4;
    } else {
        if (line.size() < 8) throw parse_error("graph6: truncated long-form header");
        n = 0;
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | detail::g6_char(line[i], "header");
        pos = 8;
    }
    if (n < 1) throw parse_error("graph6: vertex count must be positive");
    if (n > max_parse_vertices)
        throw parse_error("graph6: vertex count " + std::to_string(n) + " exceeds supported size");

    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (static_cast<long>(line.size() - pos) < need)
        throw parse_error("graph6: truncated bit string");
    if (static_cast<long>(line.size() - pos) > need)
        throw parse_error("graph6: trailing garbage after bit string");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (long k = 0; k < need; ++k) {
        int chunk = detail::g6_char(line[pos + static_cast<std::size_t>(k)], "bit string");
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if ((chunk >> b) & 1) {
                // bit index -> (i,j), column-major upper triangle: j is the
                // least column with j*(j-1)/2 > bit
                long j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                long i = bit - j * (j - 1) / 2;
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return graph(static_cast<int>(n), edges, std::string(line));
}

// Short-form emit only (n <= 62); long forms are accepted on parse.
inline std::string emit_graph6(const graph& g) {
    if (g.n() > 62)
        throw error("emit_graph6: short form supports n <= 62, got n = " + std::to_string(g.n()));
    std::string out;
    out += static_cast<char>(g.n() + 63);
    int chunk = 0, nbits = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(chunk + 63);
                chunk = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>((chunk << (6 - nbits)) + 63);
    return out;
}

// "n\nu v\nu v..." — first token is the vertex count, then endpoint pairs.
inline graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = 0;
    if (!(in >> n)) throw parse_error("edge list: missing vertex count");
    if (n < 1 || n > max_parse_vertices)
        throw parse_error("edge list: bad vertex count " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    long u;
    while (in >> u) {
        long v;
        if (!(in >> v)) throw parse_error("edge list: dangling endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v) throw parse_error("edge list: loop edge at " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw parse_error("edge list: non-numeric token");
    return graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const graph& g) {
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    std::string out = std::to_string(g.n());
    for (auto [u, v] : es) out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

// Ordered list of graphs; order is deterministic for a fixed source.
struct corpus {
    std::vector<graph> graphs;
    std::string source;
};

// One graph6 line per graph; '#' comment lines and blank lines are ignored.
inline corpus parse_corpus(std::istream& in, std::string source) {
    corpus c;
    c.source = std::move(source);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        c.graphs.push_back(parse_graph6(std::string_view(line).substr(start)));
    }
    return c;
}

inline corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open corpus file: " + path);
    return parse_corpus(in, path);
}

} // namespace tollkit
