#pragma once

/**
 * @file count.hpp
 * @brief Exact stable-set counting on concrete graphs.
 *
 * Two routes compute the independence polynomial:
 *  - enumerate_independence_poly: the definition taken literally, a sweep
 *    over all 2^n vertex subsets. Capped at n <= 30; exists as an
 *    independent oracle.
 *  - independence_poly: the vertex deletion recurrence
 *    I(G) = I(G - v) + x * I(G - N[v]) with component splitting and
 *    memoization on induced vertex subsets. This is the production path.
 */

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

inline constexpr int enumerate_cap = 30;

/// Literal definition: coefficient k counts the stable k-subsets.
inline IntPoly enumerate_independence_poly(const Graph& g) {
    const int n = g.vertex_count();
    if (n > enumerate_cap)
        throw cap_exceeded("enumerate_independence_poly: n = " + std::to_string(n) +
                           " exceeds cap of " + std::to_string(enumerate_cap));
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    std::vector<Int> counts(n + 1, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        bool stable = true;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            int v = __builtin_ctzll(rest);
            if (adj[v] & s) {
                stable = false;
                break;
            }
        }
        if (stable) counts[std::size_t(__builtin_popcountll(s))] += 1;
    }
    return IntPoly(std::move(counts));
}

namespace detail {

using CountMemo = std::unordered_map<VertexSet, IntPoly, VertexSetHash>;

/// Components of the subgraph induced by mask, as subsets of mask.
inline std::vector<VertexSet> mask_components(const Graph& g, const VertexSet& mask) {
    std::vector<VertexSet> comps;
    VertexSet left = mask;
    while (!left.empty()) {
        VertexSet comp(mask.universe());
        std::vector<int> stack{left.first()};
        left.remove(stack.back());
        comp.add(stack.back());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            (g.neighbors(u) & left).for_each([&](int w) {
                left.remove(w);
                comp.add(w);
                stack.push_back(w);
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline IntPoly indpoly_rec(const Graph& g, const VertexSet& mask, CountMemo& memo) {
    if (mask.empty()) return IntPoly{1};
    if (auto it = memo.find(mask); it != memo.end()) return it->second;

    IntPoly result;
    auto comps = mask_components(g, mask);
    if (comps.size() > 1) {
        result = IntPoly{1};
        for (const auto& comp : comps) result = result * indpoly_rec(g, comp, memo);
    } else {
        // Pivot on a vertex of maximum degree within the mask, lowest
        // index on ties, so results are deterministic.
        int pivot = -1, best = -1;
        mask.for_each([&](int v) {
            int d = (g.neighbors(v) & mask).count();
            if (d > best) {
                best = d;
                pivot = v;
            }
        });
        VertexSet without_v = mask;
        without_v.remove(pivot);
        VertexSet without_nv = mask - g.neighbors(pivot);
        without_nv.remove(pivot);
        result = indpoly_rec(g, without_v, memo) + shift_x(indpoly_rec(g, without_nv, memo));
    }
    memo.emplace(mask, result);
    return result;
}

}  // namespace detail

/// Deletion-recurrence engine; exact and identical to the enumeration
/// oracle on its domain. The memo table is scoped to this call.
inline IntPoly independence_poly(const Graph& g) {
    detail::CountMemo memo;
    return detail::indpoly_rec(g, VertexSet::full(g.vertex_count()), memo);
}

/// Stability number: degree of the independence polynomial.
inline int alpha(const Graph& g) { return independence_poly(g).degree(); }

/// All maximal stable sets plus the multiset of their cardinalities.
struct StableSetFamily {
    std::vector<VertexSet> sets;
    std::vector<int> sizes;  // ascending
};

/// Maximal stable sets of g are the maximal cliques of the complement;
/// enumerated Bron-Kerbosch style with pivoting on bitmasks (hence the
/// n <= 30 cap).
inline StableSetFamily maximal_stable_sets(const Graph& g) {
    const int n = g.vertex_count();
    if (n > enumerate_cap)
        throw cap_exceeded("maximal_stable_sets: n = " + std::to_string(n) +
                           " exceeds cap of " + std::to_string(enumerate_cap));
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n));
    std::vector<std::uint64_t> co(n, 0);  // complement adjacency
    for (int v = 0; v < n; ++v) {
        std::uint64_t a = 0;
        g.neighbors(v).for_each([&](int w) { a |= std::uint64_t(1) << w; });
        co[v] = full & ~a & ~(std::uint64_t(1) << v);
    }

    StableSetFamily fam;
    auto emit = [&](std::uint64_t r) {
        VertexSet s(n);
        for (std::uint64_t rest = r; rest; rest &= rest - 1) s.add(__builtin_ctzll(rest));
        fam.sizes.push_back(s.count());
        fam.sets.push_back(std::move(s));
    };

    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk =
        [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
            if (!p && !x) {
                emit(r);
                return;
            }
            int pivot = -1, best = -1;
            for (std::uint64_t rest = p | x; rest; rest &= rest - 1) {
                int u = __builtin_ctzll(rest);
                int c = __builtin_popcountll(p & co[u]);
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
            std::uint64_t cand = p & ~co[pivot];
            for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
                int v = __builtin_ctzll(rest);
                std::uint64_t vbit = std::uint64_t(1) << v;
                bk(r | vbit, p & co[v], x & co[v]);
                p &= ~vbit;
                x |= vbit;
            }
        };
    bk(0, full, 0);
    std::sort(fam.sizes.begin(), fam.sizes.end());
    return fam;
}

/// All maximal stable sets share one cardinality.
inline bool is_well_covered(const Graph& g) {
    auto fam = maximal_stable_sets(g);
    return fam.sizes.empty() || fam.sizes.front() == fam.sizes.back();
}

/// Well-covered, no isolated vertices, and order exactly 2*alpha.
inline bool is_very_well_covered(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    auto fam = maximal_stable_sets(g);
    if (!fam.sizes.empty() && fam.sizes.front() != fam.sizes.back()) return false;
    int a = fam.sizes.empty() ? 0 : fam.sizes.back();
    return g.vertex_count() == 2 * a;
}

}  // namespace indpoly
