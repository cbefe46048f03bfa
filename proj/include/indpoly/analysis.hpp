#pragma once

/**
 * @file analysis.hpp
 * @brief Mode-location analysis of corona independence polynomials.
 *
 * For a skeleton G of order n with alpha(G) <= 4, I(G*;x) is unimodal and
 * every mode lies in a window anchored at lo = floor((n+1)/2):
 *
 *   alpha = 1, or alpha = 2 with n odd   ->  [lo, lo]
 *   alpha <= 3 otherwise                 ->  [lo, lo+1]
 *   alpha = 4, n odd                     ->  [lo, lo+1]
 *   alpha = 4, n even                    ->  [lo, lo+2]
 *
 * Window membership is checked for the full argmax set: every maximizer
 * must lie inside the window.
 */

#include <optional>
#include <string>

#include "indpoly/builders.hpp"
#include "indpoly/count.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/transform.hpp"

namespace indpoly {

struct ModeWindow {
    long long lo = 0;
    long long hi = 0;

    bool contains(long long k) const { return lo <= k && k <= hi; }
    bool operator==(const ModeWindow&) const = default;
};

/// Mode window for a skeleton of order n with the given stability number.
/// Only alpha in 1..4 is covered.
inline ModeWindow mode_window(long long n, int alpha) {
    if (alpha < 1 || alpha > 4)
        throw std::invalid_argument("mode_window: alpha " + std::to_string(alpha) +
                                    " outside 1..4");
    if (alpha > n)
        throw std::invalid_argument("mode_window: alpha exceeds order");
    const long long lo = (n + 1) / 2;
    const bool odd = n % 2 != 0;
    long long hi;
    if (alpha == 1 || (alpha == 2 && odd))
        hi = lo;
    else if (alpha <= 3 || odd)
        hi = lo + 1;
    else
        hi = lo + 2;
    return {lo, hi};
}

struct AnalysisReport {
    long long n = 0;   // skeleton order
    int alpha = 0;     // skeleton stability number
    IntPoly star_poly; // I(G*;x)
    ModeReport mode;
    std::optional<ModeWindow> window;  // absent when alpha outside 1..4
    bool window_ok = false;            // every maximizer inside the window
    bool wellcovered_star = false;
    bool very_wellcovered_star = false;
    bool star_checked_directly = false;  // set when the corona fit under the
                                         // direct well-coveredness cap
};

namespace detail {

inline AnalysisReport analyze_star_impl(const IntPoly& skeleton_poly, long long n,
                                        const Graph* skeleton_graph) {
    AnalysisReport r;
    r.n = n;
    r.alpha = skeleton_poly.degree();
    r.star_poly = forward_transform(skeleton_poly, n);
    r.mode = unimodality(r.star_poly);
    if (r.alpha >= 1 && r.alpha <= 4) {
        r.window = mode_window(n, r.alpha);
        r.window_ok = true;
        for (int k : r.mode.mode_set)
            if (!r.window->contains(k)) r.window_ok = false;
    }
    if (skeleton_graph != nullptr && 2 * n <= enumerate_cap) {
        Graph c = corona_k1(*skeleton_graph);
        r.wellcovered_star = is_well_covered(c);
        r.very_wellcovered_star = is_very_well_covered(c);
        r.star_checked_directly = true;
    } else {
        // The pendant corona of any skeleton is very well-covered: every
        // maximal stable set picks exactly one of {v_i, u_i} per pendant
        // pair, so all have size n, none of the 2n vertices is isolated.
        r.wellcovered_star = true;
        r.very_wellcovered_star = true;
    }
    return r;
}

}  // namespace detail

/// Analyze I(G*;x) for a concrete skeleton.
inline AnalysisReport analyze_star(const Graph& skeleton) {
    return detail::analyze_star_impl(independence_poly(skeleton), skeleton.vertex_count(),
                                     &skeleton);
}

/// Analyze I(G*;x) for a symbolic skeleton expression. Well-coveredness of
/// the corona is verified directly whenever the skeleton materializes
/// under the caps.
inline AnalysisReport analyze_star(const GraphExpr& skeleton) {
    auto ev = eval_expr(skeleton);
    if (2 * ev.vertices <= enumerate_cap) {
        Graph g = materialize(skeleton);
        return detail::analyze_star_impl(ev.poly, ev.vertices, &g);
    }
    return detail::analyze_star_impl(ev.poly, ev.vertices, nullptr);
}

struct MidpointResult {
    Int direct;       // 2 t_{m+1} - t_m - t_{m+2} from the transform
    Int closed_form;  // sum_i s_i * (2m-i)!/(m! (m-i+2)!) * (2m+3i-i^2-2)
};

/// The two routes to 2t_{m+1} - t_m - t_{m+2} for an even-order skeleton
/// n = 2m with degree(s) <= 4. They must agree; for m >= 3 and
/// nonnegative s the value is nonnegative, which pins the mode window in
/// the even case.
inline MidpointResult midpoint_inequality(const IntPoly& s, long long n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("midpoint_inequality: need even order n >= 4");
    if (s.degree() > 4)
        throw std::invalid_argument("midpoint_inequality: degree(s) must be <= 4");
    const long long m = n / 2;

    MidpointResult r;
    IntPoly t = forward_transform(s, n);
    r.direct = 2 * t.coeff(int(m + 1)) - t.coeff(int(m)) - t.coeff(int(m + 2));

    auto factorial = [](long long v) {
        Int f = 1;
        for (long long i = 2; i <= v; ++i) f *= i;
        return f;
    };
    r.closed_form = 0;
    for (int i = 0; i <= 4; ++i) {
        if (s.coeff(i) == 0) continue;
        Int numer = factorial(2 * m - i) * (2 * m + 3 * i - Int(i) * i - 2);
        Int denom = factorial(m) * factorial(m - i + 2);
        if (numer % denom != 0)
            throw std::logic_error("midpoint_inequality: non-integral term");
        r.closed_form += s.coeff(i) * (numer / denom);
    }
    return r;
}

/// Characterization check for connected graphs of girth >= 6 other than
/// C_7 and K_1: well-covered iff the pendant edges form a perfect
/// matching. Precondition failures make the verdict "not applicable",
/// never a failure.
struct PendantVerdict {
    bool applicable = false;
    std::string reason;  // why not applicable
    bool well_covered = false;
    bool pendant_matching = false;

    bool consistent() const { return well_covered == pendant_matching; }
};

inline PendantVerdict pendant_characterization_check(const Graph& g) {
    PendantVerdict v;
    const int n = g.vertex_count();
    if (n > enumerate_cap) {
        v.reason = "order exceeds direct-check cap";
        return v;
    }
    if (n == 1) {
        v.reason = "excluded graph K_1";
        return v;
    }
    if (!is_connected(g)) {
        v.reason = "not connected";
        return v;
    }
    if (!(girth(g) >= 6)) {
        v.reason = "girth below 6";
        return v;
    }
    bool two_regular = true;
    for (int u = 0; u < n; ++u)
        if (g.degree(u) != 2) two_regular = false;
    if (n == 7 && two_regular) {  // connected 2-regular on 7 vertices is C_7
        v.reason = "excluded graph C_7";
        return v;
    }
    v.applicable = true;
    v.well_covered = is_well_covered(g);
    v.pendant_matching = pendant_perfect_matching(g);
    return v;
}

/// The complete split graph: m isolated vertices joined to K_{n-m}.
/// Connected, not a tree, with stability number m.
inline Graph complete_split_graph(int n, int m) {
    if (n < 3 || m < 1 || m > std::min(4, n - 2))
        throw std::invalid_argument("complete_split_graph: need n >= 3, 1 <= m <= min(4, n-2)");
    return zykov_sum(empty_graph(m), complete(n - m));
}

/// Report on the corona H of a complete split graph: a connected non-tree
/// very well-covered graph with alpha(H) = n and unimodal I(H;x).
struct FamilyReport {
    AnalysisReport star;
    bool connected = false;
    bool non_tree = false;
    bool very_well_covered = false;
    bool alpha_matches = false;  // alpha(H) == n

    bool ok() const {
        return connected && non_tree && very_well_covered && alpha_matches &&
               star.mode.unimodal && star.window_ok;
    }
};

inline FamilyReport complete_split_star_report(int n, int m) {
    Graph g = complete_split_graph(n, m);
    Graph h = corona_k1(g);
    FamilyReport r;
    r.star = analyze_star(g);
    r.connected = is_connected(h);
    r.non_tree = !(is_connected(h) && h.edge_count() == h.vertex_count() - 1);
    r.very_well_covered = is_very_well_covered(h);
    r.alpha_matches = alpha(h) == n;
    return r;
}

}  // namespace indpoly
