#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "tollkit/io.hpp"
#include "tollkit/search.hpp"

namespace tollkit {

enum class check_kind { lemmas, covers, no_extreme, tn_characterization, th2 };

inline const char* check_name(check_kind k) {
    switch (k) {
        case check_kind::lemmas: return "lemmas";
        case check_kind::covers: return "covers";
        case check_kind::no_extreme: return "no_extreme";
        case check_kind::tn_characterization: return "tn_characterization";
        case check_kind::th2: return "th2";
    }
    return "?";
}

inline const std::vector<check_kind>& all_checks() {
    static const std::vector<check_kind> all{check_kind::lemmas, check_kind::covers,
                                             check_kind::no_extreme,
                                             check_kind::tn_characterization, check_kind::th2};
    return all;
}

enum class check_outcome { pass, fail, skip };

inline const char* outcome_name(check_outcome o) {
    switch (o) {
        case check_outcome::pass: return "pass";
        case check_outcome::fail: return "fail";
        case check_outcome::skip: return "skip";
    }
    return "?";
}

// One executed check on one factor pair. A fail carries a counterexample
// payload naming the vertices/sets involved, in factor coordinates, so the
// violation can be replayed against the library.
struct verification_report {
    std::string theorem;
    std::string g6_left;
    std::string g6_right;
    check_outcome outcome = check_outcome::pass;
    std::string counterexample; // payload on fail, reason on skip, note on pass
    double millis = 0.0;
};

namespace detail {

struct check_body_result {
    check_outcome outcome;
    std::string detail;
};

template <class Body>
verification_report timed_report(check_kind kind, const graph& G, const graph& H, Body&& body) {
    verification_report r;
    r.theorem = check_name(kind);
    r.g6_left = emit_graph6(G);
    r.g6_right = emit_graph6(H);
    auto t0 = std::chrono::steady_clock::now();
    check_body_result b = body();
    auto t1 = std::chrono::steady_clock::now();
    r.outcome = b.outcome;
    r.counterexample = std::move(b.detail);
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

inline bool hypothesis_skip(const graph& G, const graph& H, bool reject_complete,
                            std::string& reason) {
    if (!is_connected(G) || !is_connected(H)) {
        reason = "disconnected factor";
        return true;
    }
    if (reject_complete && (is_complete(G) || is_complete(H))) {
        reason = "complete factor";
        return true;
    }
    return false;
}

} // namespace detail

// Membership claims for toll intervals of the strong product when both
// coordinate pairs are distinct and non-adjacent in their factors. A product
// vertex (x,y) is claimed when any of the following holds:
//   - x in T_G(x1,x2) and y in T_H(y1,y2)
//   - x outside T_G, y strictly interior to T_H       (and symmetrically)
//   - (x,y) outside N(a) and N(b), in every remaining combination
// Claims are checked as a union per vertex; overlapping cases are not
// attributed to a single lemma.
inline verification_report check_interval_lemmas(const graph& G, const graph& H) {
    return detail::timed_report(check_kind::lemmas, G, H, [&]() -> detail::check_body_result {
        std::string reason;
        if (detail::hypothesis_skip(G, H, false, reason)) return {check_outcome::skip, reason};
        if (is_complete(G) || is_complete(H))
            return {check_outcome::skip, "complete factor: no non-adjacent coordinate pairs"};

        product_graph p = strong_product(G, H);
        const graph& pg = p.graph();
        toll_interval_table tG(G), tH(H);
        long pairs = 0;

        for (int x1 = 0; x1 < G.n(); ++x1)
            for (int x2 = x1 + 1; x2 < G.n(); ++x2) {
                if (G.adjacent(x1, x2)) continue;
                for (int y1 = 0; y1 < H.n(); ++y1)
                    for (int y2 = 0; y2 < H.n(); ++y2) {
                        if (y1 == y2 || H.adjacent(y1, y2)) continue;
                        ++pairs;
                        const int a = p.encode(x1, y1), b = p.encode(x2, y2);
                        const vertex_set tp = detail::toll_interval_core(pg, a, b);
                        const vertex_set nb = pg.neighbors(a) | pg.neighbors(b);
                        const vertex_set& ig = tG.at(x1, x2);
                        const vertex_set& ih = tH.at(y1, y2);
                        for (int x = 0; x < G.n(); ++x)
                            for (int y = 0; y < H.n(); ++y) {
                                const int v = p.encode(x, y);
                                const bool in_g = ig.test(x), in_h = ih.test(y);
                                const bool interior_h = in_h && y != y1 && y != y2;
                                const bool interior_g = in_g && x != x1 && x != x2;
                                const bool claimed = (in_g && in_h) || !nb.test(v) ||
                                                     (!in_g && interior_h) ||
                                                     (interior_g && !in_h);
                                if (claimed && !tp.test(v))
                                    return {check_outcome::fail,
                                            "a=" + p.vertex_name(a) + " b=" + p.vertex_name(b) +
                                                " vertex=" + p.vertex_name(v) +
                                                " claimed member but missing from interval " +
                                                p.set_name(tp)};
                            }
                    }
            }
        if (pairs == 0) return {check_outcome::skip, "no qualifying coordinate pairs"};
        return {check_outcome::pass, std::to_string(pairs) + " coordinate pairs checked"};
    });
}

// Everything outside the two open neighborhoods belongs to the interval,
// whenever both coordinate pairs are distinct and non-adjacent.
inline verification_report check_corollary_covers(const graph& G, const graph& H) {
    return detail::timed_report(check_kind::covers, G, H, [&]() -> detail::check_body_result {
        std::string reason;
        if (detail::hypothesis_skip(G, H, false, reason)) return {check_outcome::skip, reason};
        if (is_complete(G) || is_complete(H))
            return {check_outcome::skip, "complete factor: no non-adjacent coordinate pairs"};

        product_graph p = strong_product(G, H);
        const graph& pg = p.graph();
        const vertex_set full = vertex_set::full(pg.n());
        long pairs = 0;
        for (int x1 = 0; x1 < G.n(); ++x1)
            for (int x2 = x1 + 1; x2 < G.n(); ++x2) {
                if (G.adjacent(x1, x2)) continue;
                for (int y1 = 0; y1 < H.n(); ++y1)
                    for (int y2 = 0; y2 < H.n(); ++y2) {
                        if (y1 == y2 || H.adjacent(y1, y2)) continue;
                        ++pairs;
                        const int a = p.encode(x1, y1), b = p.encode(x2, y2);
                        const vertex_set tp = detail::toll_interval_core(pg, a, b);
                        const vertex_set nb = pg.neighbors(a) | pg.neighbors(b);
                        if (!((nb | tp) == full)) {
                            vertex_set missing = (nb | tp).complement();
                            return {check_outcome::fail,
                                    "a=" + p.vertex_name(a) + " b=" + p.vertex_name(b) +
                                        " uncovered=" + p.set_name(missing)};
                        }
                    }
            }
        if (pairs == 0) return {check_outcome::skip, "no qualifying coordinate pairs"};
        return {check_outcome::pass, std::to_string(pairs) + " coordinate pairs checked"};
    });
}

// Strong products of connected non-complete factors have no extreme
// vertices; per coordinate, a vertex can only be extreme if its projections
// are extreme in the factors.
inline verification_report check_no_extreme(const graph& G, const graph& H) {
    return detail::timed_report(check_kind::no_extreme, G, H, [&]() -> detail::check_body_result {
        std::string reason;
        if (detail::hypothesis_skip(G, H, true, reason)) return {check_outcome::skip, reason};

        product_graph p = strong_product(G, H);
        const vertex_set ext = extreme_vertices(p.graph());
        if (ext.any()) {
            // name which projection claim broke too: an extreme product
            // vertex must project to extreme vertices of both factors
            const vertex_set extG = extreme_vertices(G);
            const vertex_set extH = extreme_vertices(H);
            std::string bad;
            ext.for_each([&](int v) {
                auto [x, y] = p.decode(v);
                if (!extG.test(x) || !extH.test(y)) bad += p.vertex_name(v);
            });
            std::string payload = "extreme vertices found: " + p.set_name(ext);
            if (!bad.empty()) payload += "; with non-extreme projection: " + bad;
            return {check_outcome::fail, payload};
        }
        return {check_outcome::pass, ""};
    });
}

// tn(G x H) is 2 or 3; it is 2 exactly when the dominated-neighbor-free pair
// exists, and the diametral triple {(x1,y1),(x2,y1),(x2,y2)} is always a
// toll set.
inline verification_report check_tn_bound_and_characterization(const graph& G, const graph& H) {
    return detail::timed_report(
        check_kind::tn_characterization, G, H, [&]() -> detail::check_body_result {
            std::string reason;
            if (detail::hypothesis_skip(G, H, true, reason)) return {check_outcome::skip, reason};

            product_graph p = strong_product(G, H);
            toll_interval_table table(p.graph());
            const vertex_set full = vertex_set::full(p.graph().n());

            auto tn = min_toll_set(table, 3);
            if (!tn)
                return {check_outcome::fail, "no toll set of size <= 3 found"};
            if (tn->value != 2 && tn->value != 3)
                return {check_outcome::fail, "tn = " + std::to_string(tn->value)};

            auto pair = tn2_witness_predicate(p);
            if ((tn->value == 2) != pair.has_value())
                return {check_outcome::fail,
                        "tn = " + std::to_string(tn->value) + " but witness predicate " +
                            (pair ? "present at a=" + p.vertex_name(pair->first) +
                                        " b=" + p.vertex_name(pair->second)
                                  : "absent")};
            if (pair) {
                vertex_set s(p.graph().n());
                s.set(pair->first);
                s.set(pair->second);
                if (!(table.closure(s) == full))
                    return {check_outcome::fail,
                            "predicate pair a=" + p.vertex_name(pair->first) +
                                " b=" + p.vertex_name(pair->second) + " is not a toll set"};
            }

            auto [x1, x2] = diametral_pair(G);
            auto [y1, y2] = diametral_pair(H);
            vertex_set triple(p.graph().n());
            triple.set(p.encode(x1, y1));
            triple.set(p.encode(x2, y1));
            triple.set(p.encode(x2, y2));
            if (!(table.closure(triple) == full))
                return {check_outcome::fail,
                        "diametral triple " + p.set_name(triple) + " is not a toll set"};

            return {check_outcome::pass,
                    "tn=" + std::to_string(tn->value) +
                        (pair ? " pair=" + p.vertex_name(pair->first) + p.vertex_name(pair->second)
                              : "")};
        });
}

// th(G x H) = 2 for connected non-complete factors; the diametral pair is a
// t-hull set and picks up (x2,y1) in its first closure.
inline verification_report check_th(const graph& G, const graph& H) {
    return detail::timed_report(check_kind::th2, G, H, [&]() -> detail::check_body_result {
        std::string reason;
        if (detail::hypothesis_skip(G, H, true, reason)) return {check_outcome::skip, reason};

        product_graph p = strong_product(G, H);
        toll_interval_table table(p.graph());
        const vertex_set full = vertex_set::full(p.graph().n());

        auto th = min_hull_set(table, 2);
        if (!th || th->value != 2)
            return {check_outcome::fail,
                    th ? "th = " + std::to_string(th->value) : "th > 2"};

        auto [x1, x2] = diametral_pair(G);
        auto [y1, y2] = diametral_pair(H);
        const int a = p.encode(x1, y1), b = p.encode(x2, y2);
        if (!table.at(a, b).test(p.encode(x2, y1)))
            return {check_outcome::fail, "(x2,y1)=" + p.vertex_name(p.encode(x2, y1)) +
                                             " not in interval of a=" + p.vertex_name(a) +
                                             " b=" + p.vertex_name(b)};

        vertex_set s(p.graph().n());
        s.set(a);
        s.set(b);
        vertex_set cur = s;
        for (;;) {
            vertex_set next = table.closure(cur);
            if (next == cur) break;
            cur = std::move(next);
        }
        if (!(cur == full))
            return {check_outcome::fail, "diametral pair a=" + p.vertex_name(a) +
                                             " b=" + p.vertex_name(b) +
                                             " hulls to proper subset " + p.set_name(cur)};
        return {check_outcome::pass, "th=2"};
    });
}

inline verification_report run_check(check_kind kind, const graph& G, const graph& H) {
    switch (kind) {
        case check_kind::lemmas: return check_interval_lemmas(G, H);
        case check_kind::covers: return check_corollary_covers(G, H);
        case check_kind::no_extreme: return check_no_extreme(G, H);
        case check_kind::tn_characterization: return check_tn_bound_and_characterization(G, H);
        case check_kind::th2: return check_th(G, H);
    }
    throw error("run_check: unknown check");
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct sweep_result {
    std::vector<verification_report> reports;
    long passed = 0, failed = 0, skipped = 0;
};

// Every selected check on every ordered factor pair. Instances fan out over
// `jobs` worker threads; reports come back in input order regardless of the
// worker count. A thrown exception (an internal error, never a mathematical
// failure) aborts the sweep.
inline sweep_result sweep(const corpus& left, const corpus& right,
                          const std::vector<check_kind>& checks, int jobs = 1) {
    const std::size_t tasks = left.graphs.size() * right.graphs.size();
    std::vector<std::vector<verification_report>> slots(tasks);
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks) return;
            try {
                const graph& G = left.graphs[t / right.graphs.size()];
                const graph& H = right.graphs[t % right.graphs.size()];
                for (check_kind k : checks) slots[t].push_back(run_check(k, G, H));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                cursor.store(tasks);
                return;
            }
        }
    };

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    sweep_result out;
    for (auto& slot : slots)
        for (auto& r : slot) {
            switch (r.outcome) {
                case check_outcome::pass: ++out.passed; break;
                case check_outcome::fail: ++out.failed; break;
                case check_outcome::skip: ++out.skipped; break;
            }
            out.reports.push_back(std::move(r));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline std::string to_line(const verification_report& r) {
    return "theorem=" + r.theorem + " g6_left=" + r.g6_left + " g6_right=" + r.g6_right +
           " outcome=" + outcome_name(r.outcome) + " counterexample=\"" + r.counterexample +
           "\" millis=" + std::to_string(r.millis);
}

inline std::string to_text(const sweep_result& s) {
    std::string out;
    for (const auto& r : s.reports) out += to_line(r) + "\n";
    out += "summary: pass=" + std::to_string(s.passed) + " fail=" + std::to_string(s.failed) +
           " skip=" + std::to_string(s.skipped) + "\n";
    return out;
}

inline nlohmann::json to_json(const verification_report& r) {
    return nlohmann::json{{"theorem", r.theorem},
                          {"g6_left", r.g6_left},
                          {"g6_right", r.g6_right},
                          {"outcome", outcome_name(r.outcome)},
                          {"counterexample", r.counterexample},
                          {"millis", r.millis}};
}

inline nlohmann::json to_json(const sweep_result& s) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    return nlohmann::json{
        {"summary",
         {{"pass", s.passed}, {"fail", s.failed}, {"skip", s.skipped}}},
        {"reports", std::move(reports)}};
}

} // namespace tollkit
