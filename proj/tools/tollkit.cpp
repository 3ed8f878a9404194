// tollkit CLI: graph construction, toll invariants, products, theorem
// verification and exhaustive sweeps over small-graph corpora.
//
// Graph arguments use one micro-syntax everywhere:
//   g6:<line>            a graph6 literal
//   file:<path>          graph6 lines (or an edge-list file; sniffed)
//   family:<kind>:<n>    path | cycle | complete | paw_pendant
//
// Exit codes: 0 success (and sweeps with zero failures), 1 usage error,
// 2 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tollkit/tollkit.hpp"

namespace {

using nlohmann::json;
using namespace tollkit;

graph_family family_from_name(const std::string& name) {
    if (name == "path") return graph_family::path;
    if (name == "cycle") return graph_family::cycle;
    if (name == "complete") return graph_family::complete;
    if (name == "paw_pendant") return graph_family::paw_pendant;
    throw parse_error("unknown family '" + name + "' (path|cycle|complete|paw_pendant)");
}

// Whole file as a corpus: edge-list files start with a bare integer line,
// anything else is graph6 lines with '#' comments.
corpus corpus_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::istringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string token = line.substr(start, end - start + 1);
        if (token.find_first_not_of("0123456789") == std::string::npos) {
            corpus c;
            c.graphs.push_back(parse_edge_list(text));
            c.source = path;
            return c;
        }
        break;
    }
    std::istringstream stream(text);
    return parse_corpus(stream, path);
}

corpus corpus_from_spec(const std::string& spec) {
    corpus c;
    c.source = spec;
    if (spec.rfind("g6:", 0) == 0) {
        c.graphs.push_back(parse_graph6(spec.substr(3)));
    } else if (spec.rfind("file:", 0) == 0) {
        return corpus_from_file(spec.substr(5));
    } else if (spec.rfind("family:", 0) == 0) {
        std::string rest = spec.substr(7);
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw parse_error("family spec needs a size: family:<kind>:<n>");
        int n = 0;
        try {
            n = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw parse_error("bad family size in '" + spec + "'");
        }
        c.graphs.push_back(family(family_from_name(rest.substr(0, colon)), n));
    } else {
        throw parse_error("unknown graph spec '" + spec + "' (expected g6:/file:/family:)");
    }
    return c;
}

graph graph_from_spec(const std::string& spec) {
    corpus c = corpus_from_spec(spec);
    if (c.graphs.empty()) throw parse_error("no graph found in '" + spec + "'");
    return c.graphs.front();
}

std::pair<int, int> pair_from_spec(const std::string& spec) {
    std::size_t comma = spec.find(',');
    if (comma == std::string::npos) throw parse_error("--pair expects 'u,v'");
    try {
        return {std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1))};
    } catch (const std::exception&) {
        throw parse_error("--pair expects integers: '" + spec + "'");
    }
}

std::vector<check_kind> checks_from_name(const std::string& name) {
    if (name == "all") return all_checks();
    if (name == "lemmas") return {check_kind::lemmas};
    if (name == "covers") return {check_kind::covers};
    if (name == "no_extreme") return {check_kind::no_extreme};
    if (name == "tn_characterization") return {check_kind::tn_characterization};
    if (name == "th2") return {check_kind::th2};
    throw parse_error("unknown check '" + name +
                      "' (lemmas|covers|no_extreme|tn_characterization|th2|all)");
}

int default_jobs() {
    if (const char* env = std::getenv("TOLLKIT_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << content;
}

json witness_json(const vertex_set& s) {
    json arr = json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

// ---------------------------------------------------------------------------

struct compute_args {
    std::string invariant, graph_spec;
    bool machine = false;
};

int run_compute(const compute_args& a) {
    graph g = graph_from_spec(a.graph_spec);
    invariant_result r;
    if (a.invariant == "tn") r = toll_number(g);
    else if (a.invariant == "th") r = t_hull_number(g);
    else if (a.invariant == "g") r = geodetic_number(g);
    else if (a.invariant == "hn") r = hull_number(g);
    else if (a.invariant == "ext") {
        require_connected(g, "ext");
        vertex_set ext = extreme_vertices(g);
        r = invariant_result{ext.count(), ext, 0};
    } else {
        throw parse_error("unknown invariant '" + a.invariant + "' (tn|th|g|hn|ext)");
    }

    if (a.machine) {
        std::cout << json{{"command", "compute"},
                          {"invariant", a.invariant},
                          {"graph", a.graph_spec},
                          {"value", r.value},
                          {"witness", witness_json(r.witness)},
                          {"explored", r.explored}}
                         .dump()
                  << "\n";
    } else {
        std::cout << a.invariant << " = " << r.value << ", witness " << r.witness.to_string()
                  << "\n";
    }
    return 0;
}

struct interval_args {
    std::string graph_spec, pair, dot_path;
    bool machine = false;
};

int run_interval(const interval_args& a) {
    graph g = graph_from_spec(a.graph_spec);
    auto [u, v] = pair_from_spec(a.pair);
    g.check_vertex(u);
    g.check_vertex(v);
    vertex_set t = toll_interval(g, u, v);
    if (a.machine) {
        std::cout << json{{"command", "interval"},
                          {"graph", a.graph_spec},
                          {"pair", {u, v}},
                          {"interval", witness_json(t)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << t.to_string() << "\n";
    }
    if (!a.dot_path.empty()) {
        dot_options opt;
        opt.highlight = t;
        opt.accent = vertex_set::of(g.n(), {u, v});
        write_file(a.dot_path, to_dot(g, opt));
    }
    return 0;
}

struct product_args {
    std::string left, right, kind = "strong", dot_path;
    bool machine = false;
};

int run_product(const product_args& a) {
    graph left = graph_from_spec(a.left);
    graph right = graph_from_spec(a.right);
    product_kind kind;
    if (a.kind == "strong") kind = product_kind::strong;
    else if (a.kind == "cartesian") kind = product_kind::cartesian;
    else if (a.kind == "lex") kind = product_kind::lexicographic;
    else throw parse_error("unknown product kind '" + a.kind + "' (strong|cartesian|lex)");

    product_graph p(kind, left, right);
    const bool short_form = p.graph().n() <= 62;
    if (a.machine) {
        json out{{"command", "product"}, {"kind", a.kind},       {"left", a.left},
                 {"right", a.right},     {"n", p.graph().n()},   {"edges", p.graph().edge_count()}};
        if (short_form) out["graph6"] = emit_graph6(p.graph());
        else out["edge_list"] = emit_edge_list(p.graph());
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (short_form ? emit_graph6(p.graph()) : emit_edge_list(p.graph())) << "\n";
    }
    if (!a.dot_path.empty()) {
        dot_options opt;
        opt.coordinates = &p;
        write_file(a.dot_path, to_dot(p.graph(), opt));
    }
    return 0;
}

struct verify_args {
    std::string check = "all", left, right;
    bool machine = false;
};

int run_verify(const verify_args& a) {
    graph left = graph_from_spec(a.left);
    graph right = graph_from_spec(a.right);
    bool failed = false;
    json reports = json::array();
    for (check_kind kind : checks_from_name(a.check)) {
        verification_report r = run_check(kind, left, right);
        failed = failed || r.outcome == check_outcome::fail;
        if (a.machine) reports.push_back(to_json(r));
        else std::cout << to_line(r) << "\n";
    }
    if (a.machine) std::cout << json{{"command", "verify"}, {"reports", reports}}.dump() << "\n";
    return failed ? 2 : 0;
}

struct sweep_args {
    std::string check = "all", left, right;
    int max_n = 0;
    int jobs = default_jobs();
    bool machine = false;
};

corpus generated_corpus(int max_n) {
    corpus all;
    all.source = "connected:n<=" + std::to_string(max_n);
    for (int n = 2; n <= max_n; ++n) {
        corpus c = enumerate_connected(n);
        all.graphs.insert(all.graphs.end(), c.graphs.begin(), c.graphs.end());
    }
    return all;
}

int run_sweep(const sweep_args& a) {
    corpus left, right;
    if (a.left.empty() != a.right.empty())
        throw parse_error("sweep needs both --left and --right, or neither");
    if (a.left.empty()) {
        if (a.max_n < 2) throw parse_error("sweep without corpora requires --max-n K (K >= 2)");
        if (a.max_n > max_enumeration_vertices)
            throw parse_error("--max-n capped at " + std::to_string(max_enumeration_vertices));
        left = generated_corpus(a.max_n);
        right = left;
    } else {
        left = corpus_from_spec(a.left);
        right = corpus_from_spec(a.right);
        if (a.max_n > 0) {
            auto too_big = [&](const graph& g) { return g.n() > a.max_n; };
            std::erase_if(left.graphs, too_big);
            std::erase_if(right.graphs, too_big);
        }
    }

    sweep_result r = sweep(left, right, checks_from_name(a.check), a.jobs);
    if (a.machine) {
        json doc = to_json(r);
        doc["command"] = "sweep";
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << to_text(r);
    }
    return r.failed > 0 ? 2 : 0;
}

struct gen_args {
    int n = 0, max_n = 0;
    bool skip_complete = false;
    bool machine = false;
};

int run_gen(const gen_args& a) {
    if ((a.n == 0) == (a.max_n == 0))
        throw parse_error("gen requires exactly one of --n N or --max-n K");
    std::vector<graph> graphs;
    const int lo = a.n ? a.n : 2;
    const int hi = a.n ? a.n : a.max_n;
    for (int n = lo; n <= hi; ++n) {
        corpus c = enumerate_connected(n, a.skip_complete);
        graphs.insert(graphs.end(), c.graphs.begin(), c.graphs.end());
    }
    if (a.machine) {
        json arr = json::array();
        for (const graph& g : graphs) arr.push_back(emit_graph6(g));
        std::cout << json{{"command", "gen"},
                          {"count", graphs.size()},
                          {"skip_complete", a.skip_complete},
                          {"graphs", arr}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "# connected graphs, n=" << lo << ".." << hi
                  << (a.skip_complete ? ", complete graphs skipped" : "") << "\n";
        for (const graph& g : graphs) std::cout << emit_graph6(g) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tollkit: toll convexity invariants and product theorems on small graphs"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* cmd, bool& machine) {
        cmd->add_option_function<std::string>(
            "--format",
            [&machine](const std::string& f) {
                if (f == "machine") machine = true;
                else if (f != "text") throw CLI::ValidationError("--format is text|machine");
            },
            "output format (text|machine)");
    };

    compute_args ca;
    auto* compute = app.add_subcommand("compute", "compute an invariant of one graph");
    compute->add_option("--invariant", ca.invariant, "tn|th|g|hn|ext")->required();
    compute->add_option("--graph", ca.graph_spec, "graph spec")->required();
    add_format(compute, ca.machine);

    interval_args ia;
    auto* interval = app.add_subcommand("interval", "toll interval between two vertices");
    interval->add_option("--graph", ia.graph_spec, "graph spec")->required();
    interval->add_option("--pair", ia.pair, "vertex pair u,v")->required();
    interval->add_option("--emit-dot", ia.dot_path, "write a DOT rendering here");
    add_format(interval, ia.machine);

    product_args pa;
    auto* product = app.add_subcommand("product", "build a graph product");
    product->add_option("--left", pa.left, "left factor spec")->required();
    product->add_option("--right", pa.right, "right factor spec")->required();
    product->add_option("--kind", pa.kind, "strong|cartesian|lex");
    product->add_option("--emit-dot", pa.dot_path, "write a DOT rendering here");
    add_format(product, pa.machine);

    verify_args va;
    auto* verify = app.add_subcommand("verify", "run theorem checks on one factor pair");
    verify->add_option("--check", va.check,
                       "lemmas|covers|no_extreme|tn_characterization|th2|all");
    verify->add_option("--left", va.left, "left factor spec")->required();
    verify->add_option("--right", va.right, "right factor spec")->required();
    add_format(verify, va.machine);

    sweep_args sa;
    auto* sweep_cmd = app.add_subcommand("sweep", "run checks over corpora of factor pairs");
    sweep_cmd->add_option("--check", sa.check,
                          "lemmas|covers|no_extreme|tn_characterization|th2|all");
    sweep_cmd->add_option("--left", sa.left, "left corpus spec (file:/g6:/family:)");
    sweep_cmd->add_option("--right", sa.right, "right corpus spec");
    sweep_cmd->add_option("--max-n", sa.max_n,
                          "generate corpora of connected graphs up to this order, or cap "
                          "corpus graphs at it");
    sweep_cmd->add_option("--jobs", sa.jobs, "worker threads (default $TOLLKIT_JOBS or 1)");
    add_format(sweep_cmd, sa.machine);

    gen_args ga;
    auto* gen = app.add_subcommand("gen", "enumerate connected graphs as graph6 lines");
    gen->add_option("--n", ga.n, "exact order (2..7)");
    gen->add_option("--max-n", ga.max_n, "orders 2..K");
    gen->add_flag("--skip-complete", ga.skip_complete, "drop complete graphs");
    add_format(gen, ga.machine);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (compute->parsed()) return run_compute(ca);
        if (interval->parsed()) return run_interval(ia);
        if (product->parsed()) return run_product(pa);
        if (verify->parsed()) return run_verify(va);
        if (sweep_cmd->parsed()) return run_sweep(sa);
        if (gen->parsed()) return run_gen(ga);
    } catch (const tollkit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
