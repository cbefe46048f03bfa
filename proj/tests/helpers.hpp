#pragma once

// Shared test utilities: deterministic RNG handles and random generators
// for graphs and expression trees.

#include <cstdint>
#include <random>
#include <vector>

#include "indpoly/indpoly.hpp"

namespace testutil {

/// Fixed-seed RNG; salt distinguishes independent streams per test.
inline std::mt19937_64 seeded(std::uint64_t salt) {
    return std::mt19937_64(0x9e3779b97f4a7c15ull ^ salt);
}

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % std::uint64_t(hi - lo + 1));
}

/// Random base-graph expression of at most max_n vertices (max_n >= 1).
inline indpoly::ExprPtr random_base(std::mt19937_64& rng, long long max_n) {
    using namespace indpoly;
    switch (rng() % 7) {
        case 0: return make_base(BaseKind::complete, pick(rng, 0, max_n));
        case 1: return make_base(BaseKind::path, pick(rng, 0, max_n));
        case 2:
            if (max_n >= 3) return make_base(BaseKind::cycle, pick(rng, 3, max_n));
            return make_base(BaseKind::complete, pick(rng, 0, max_n));
        case 3: return make_base(BaseKind::empty, pick(rng, 0, max_n));
        case 4: return make_base(BaseKind::star, pick(rng, 0, max_n - 1));
        case 5:
            if (max_n >= 2) return make_base(BaseKind::complete_minus_edge, pick(rng, 2, max_n));
            return make_base(BaseKind::empty, pick(rng, 0, max_n));
        default: {
            std::vector<long long> parts;
            long long left = max_n;
            do {
                long long p = pick(rng, 1, left);
                parts.push_back(p);
                left -= p;
            } while (left > 0 && rng() % 2 == 0);
            return make_multipartite(std::move(parts));
        }
    }
}

/// Random expression tree whose graph has at most `budget` vertices
/// (budget >= 1), always materializable.
inline indpoly::ExprPtr random_expr(std::mt19937_64& rng, long long budget, int depth) {
    using namespace indpoly;
    if (depth <= 0 || budget <= 2 || rng() % 3 == 0) return random_base(rng, budget);
    switch (rng() % 4) {
        case 0: {
            long long bl = pick(rng, 1, budget - 1);
            return make_union(random_expr(rng, bl, depth - 1),
                              random_expr(rng, budget - bl, depth - 1));
        }
        case 1: {
            long long k = pick(rng, 1, 3);
            return make_union_pow(k, random_expr(rng, budget / k, depth - 1));
        }
        case 2: {
            long long bl = pick(rng, 1, budget - 1);
            return make_join(random_expr(rng, bl, depth - 1),
                             random_expr(rng, budget - bl, depth - 1));
        }
        default:
            return make_corona(random_expr(rng, budget / 2, depth - 1));
    }
}

}  // namespace testutil
