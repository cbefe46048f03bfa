#pragma once

/**
 * @file sweep.hpp
 * @brief Bulk verification harness over skeleton graphs.
 *
 * Sweeps labeled graphs exhaustively (all 2^C(n,2) edge sets for each
 * order up to n_max <= 7) or by seeded sampling, runs the corona mode
 * analysis on every skeleton, and collects violations together with a
 * witness edge list. For stability number <= 3 and even order the full
 * monotone chain t_0 <= ... <= t_m, t_{m+1} >= ... >= t_n is asserted,
 * not just the mode window; for stability number 1 (and 2 with odd
 * order) the mode must be the exact singleton floor((n+1)/2). Skeletons
 * with stability number >= 5 are counted and their unimodality logged,
 * never asserted.
 */

#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indpoly/analysis.hpp"
#include "indpoly/builders.hpp"
#include "indpoly/count.hpp"

namespace indpoly {

enum class SweepMode { exhaustive, sample };

struct SweepParams {
    int n_max = 6;
    SweepMode mode = SweepMode::exhaustive;
    long long samples = 10000;    // sample mode only
    std::uint64_t seed = 0;       // sample mode only; recorded in the report
    bool collect_rows = false;    // keep one row per graph for CSV export
};

struct SweepViolation {
    int n = 0;
    int alpha = 0;
    std::vector<std::pair<int, int>> witness_edges;
    std::string what;
};

/// One graph's worth of CSV output.
struct SweepRow {
    int n = 0;
    int alpha = 0;
    long long edges = 0;
    bool unimodal = false;
    long long mode_lo = 0, mode_hi = 0;
    long long window_lo = -1, window_hi = -1;  // -1 when no window applies
    bool ok = true;
};

struct SweepReport {
    SweepParams params;
    long long graphs_seen = 0;
    std::array<long long, 5> by_alpha{};  // counts for alpha = 1..4 (index 0 unused)
    long long alpha_ge5 = 0;
    long long alpha_ge5_nonunimodal = 0;  // logged, never asserted
    std::vector<SweepViolation> violations;
    std::vector<SweepRow> rows;  // populated when params.collect_rows

    bool ok() const { return violations.empty(); }
};

/// Seeded G(n, p) sample with dyadic edge probability p = 2^-bits.
inline Graph random_graph(std::mt19937_64& rng, int n, int bits = 1) {
    if (n < 0) throw std::invalid_argument("random_graph: negative order");
    if (bits < 1 || bits > 62) throw std::invalid_argument("random_graph: bits outside 1..62");
    const std::uint64_t need = (std::uint64_t(1) << bits) - 1;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() & need) == need) g.add_edge(u, v);
    return g;
}

/// Seeded uniform random labeled tree on n >= 1 vertices, decoded from a
/// random code sequence of length n-2 (each tree equally likely).
inline Graph random_tree(std::mt19937_64& rng, int n) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> code(std::size_t(n) - 2);
    for (auto& c : code) c = int(rng() % std::uint64_t(n));
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        g.add_edge(leaf, c);
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

namespace detail {

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

/// Skeleton polynomial: the subset oracle is fastest at sweep sizes, the
/// recursive engine takes over beyond it.
inline IntPoly sweep_skeleton_poly(const Graph& g) {
    return g.vertex_count() <= 13 ? enumerate_independence_poly(g) : independence_poly(g);
}

inline void sweep_examine(const Graph& g, SweepReport& rep) {
    ++rep.graphs_seen;
    const int n = g.vertex_count();
    IntPoly s = sweep_skeleton_poly(g);
    const int a = s.degree();

    auto violate = [&](const std::string& what) {
        rep.violations.push_back({n, a, g.edges(), what});
    };

    IntPoly t = forward_transform(s, n);
    ModeReport mode = unimodality(t);
    long long mode_lo = mode.mode_set.front();
    long long mode_hi = mode.mode_set.back();

    SweepRow row;
    row.n = n;
    row.alpha = a;
    row.edges = g.edge_count();
    row.unimodal = mode.unimodal;
    row.mode_lo = mode_lo;
    row.mode_hi = mode_hi;

    if (a >= 5) {
        ++rep.alpha_ge5;
        if (!mode.unimodal) ++rep.alpha_ge5_nonunimodal;
    } else if (a >= 1) {
        ++rep.by_alpha[std::size_t(a)];
        ModeWindow w = mode_window(n, a);
        row.window_lo = w.lo;
        row.window_hi = w.hi;
        if (!mode.unimodal) {
            violate("corona polynomial not unimodal");
            row.ok = false;
        }
        for (int k : mode.mode_set)
            if (!w.contains(k)) {
                violate("mode " + std::to_string(k) + " outside window [" +
                        std::to_string(w.lo) + "," + std::to_string(w.hi) + "]");
                row.ok = false;
                break;
            }
        if (a == 1 || (a == 2 && n % 2 != 0)) {
            if (mode.mode_set.size() != 1 || mode_lo != w.lo) {
                violate("mode set is not the exact singleton {" + std::to_string(w.lo) + "}");
                row.ok = false;
            }
        }
        if (a <= 3 && n % 2 == 0) {
            const int m = n / 2;
            bool chain = true;
            for (int k = 0; k < m; ++k)
                if (t.coeff(k) > t.coeff(k + 1)) chain = false;
            for (int k = m + 1; k < n; ++k)
                if (t.coeff(k) < t.coeff(k + 1)) chain = false;
            if (!chain) {
                violate("monotone chain t_0<=...<=t_m, t_{m+1}>=...>=t_n broken");
                row.ok = false;
            }
        }
    }

    if (rep.params.collect_rows) rep.rows.push_back(row);
}

}  // namespace detail

/// Sweep every labeled graph of order 1..n_max (exhaustive; n_max <= 7)
/// or a seeded random sample, checking each skeleton's corona analysis.
inline SweepReport sweep_verify(const SweepParams& params) {
    SweepReport rep;
    rep.params = params;
    if (params.mode == SweepMode::exhaustive) {
        if (params.n_max > 7)
            throw cap_exceeded("sweep_verify: exhaustive mode capped at order 7 (2^21 graphs); "
                               "requested " + std::to_string(params.n_max));
        for (int n = 1; n <= params.n_max; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask >> pairs == 0; ++mask)
                detail::sweep_examine(detail::graph_from_edge_mask(n, mask), rep);
        }
    } else {
        if (params.n_max < 1)
            throw std::invalid_argument("sweep_verify: n_max must be >= 1");
        std::mt19937_64 rng(params.seed);
        for (long long i = 0; i < params.samples; ++i) {
            int n = 1 + int(rng() % std::uint64_t(params.n_max));
            int bits = 1 + int(i % 3);  // edge probabilities 1/2, 1/4, 1/8 in rotation
            detail::sweep_examine(random_graph(rng, n, bits), rep);
        }
    }
    return rep;
}

inline nlohmann::json to_json(const SweepViolation& v) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : v.witness_edges) edges.push_back({a, b});
    return {{"n", v.n}, {"alpha", v.alpha}, {"what", v.what}, {"witness_edges", edges}};
}

inline nlohmann::json to_json(const SweepReport& r) {
    nlohmann::json j;
    j["mode"] = r.params.mode == SweepMode::exhaustive ? "exhaustive" : "sample";
    j["n_max"] = r.params.n_max;
    if (r.params.mode == SweepMode::sample) {
        j["samples"] = r.params.samples;
        j["seed"] = r.params.seed;
    }
    j["graphs_seen"] = r.graphs_seen;
    j["by_alpha"] = {{"1", r.by_alpha[1]},
                     {"2", r.by_alpha[2]},
                     {"3", r.by_alpha[3]},
                     {"4", r.by_alpha[4]}};
    j["alpha_ge5"] = r.alpha_ge5;
    j["alpha_ge5_nonunimodal"] = r.alpha_ge5_nonunimodal;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
    j["ok"] = r.ok();
    return j;
}

/// CSV rows (requires the sweep to have run with collect_rows).
inline std::string to_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "n,alpha,edges,unimodal,mode_lo,mode_hi,window_lo,window_hi,ok\n";
    for (const auto& row : r.rows)
        out << row.n << ',' << row.alpha << ',' << row.edges << ',' << (row.unimodal ? 1 : 0)
            << ',' << row.mode_lo << ',' << row.mode_hi << ',' << row.window_lo << ','
            << row.window_hi << ',' << (row.ok ? 1 : 0) << '\n';
    return std::move(out).str();
}

}  // namespace indpoly
