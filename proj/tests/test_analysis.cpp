#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "indpoly/indpoly.hpp"

using namespace indpoly;

TEST_CASE("mode windows by stability number and parity") {
    REQUIRE(mode_window(4, 1) == ModeWindow{2, 2});
    REQUIRE(mode_window(5, 1) == ModeWindow{3, 3});
    REQUIRE(mode_window(5, 2) == ModeWindow{3, 3});   // alpha 2, odd order: exact
    REQUIRE(mode_window(4, 2) == ModeWindow{2, 3});
    REQUIRE(mode_window(5, 3) == ModeWindow{3, 4});
    REQUIRE(mode_window(6, 3) == ModeWindow{3, 4});
    REQUIRE(mode_window(7, 4) == ModeWindow{4, 5});   // alpha 4, odd order
    REQUIRE(mode_window(8, 4) == ModeWindow{4, 6});   // alpha 4, even order
    REQUIRE(mode_window(4, 4) == ModeWindow{2, 4});
    REQUIRE(mode_window(7240, 4) == ModeWindow{3620, 3622});
    REQUIRE_THROWS_AS(mode_window(6, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(mode_window(6, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(mode_window(3, 4), std::invalid_argument);
}

TEST_CASE("corona analysis of a lone vertex") {
    AnalysisReport r = analyze_star(complete(1));
    REQUIRE(r.n == 1);
    REQUIRE(r.alpha == 1);
    REQUIRE(r.star_poly == IntPoly{1, 2});
    REQUIRE(r.mode.mode_set == std::vector<int>{1});
    REQUIRE(r.window == ModeWindow{1, 1});
    REQUIRE(r.window_ok);
    REQUIRE(r.mode.unimodal);
    REQUIRE(r.wellcovered_star);
    REQUIRE(r.very_wellcovered_star);
    REQUIRE(r.star_checked_directly);
}

TEST_CASE("corona analysis of published skeletons") {
    AnalysisReport r = analyze_star(*parse("union(K(1),P(3))"));
    REQUIRE(r.n == 4);
    REQUIRE(r.alpha == 3);
    REQUIRE(r.star_poly == IntPoly{1, 8, 22, 25, 10});
    REQUIRE(r.mode.mode_set == std::vector<int>{3});  // upper end of the window
    REQUIRE(r.window == ModeWindow{2, 3});
    REQUIRE(r.window_ok);

    // Two disjoint copies of P_8: stability number 8, so no window applies,
    // but the published mode 10 = floor(17/2)+2 and unimodality still hold.
    r = analyze_star(*parse("du(2,P(8))"));
    REQUIRE(r.n == 16);
    REQUIRE(r.alpha == 8);
    REQUIRE(r.mode.mode_set == std::vector<int>{10});
    REQUIRE_FALSE(r.window.has_value());
    REQUIRE(r.mode.unimodal);
    REQUIRE_FALSE(r.star_checked_directly);  // 32 vertices: structural verdict
    REQUIRE(r.very_wellcovered_star);

    // An even-order stability-4 skeleton that does carry the [lo, lo+2] window.
    r = analyze_star(*parse("du(4,K(4))"));
    REQUIRE(r.n == 16);
    REQUIRE(r.alpha == 4);
    REQUIRE(r.window == ModeWindow{8, 10});
    REQUIRE(r.window_ok);
    REQUIRE(r.mode.unimodal);

    r = analyze_star(*parse("E(4)"));
    REQUIRE(r.star_poly == IntPoly{1, 8, 24, 32, 16});
    REQUIRE(r.mode.mode_set == std::vector<int>{3});
    REQUIRE(r.window == ModeWindow{2, 4});
    REQUIRE(r.window_ok);

    r = analyze_star(*parse("P(3)"));
    REQUIRE(r.star_poly == IntPoly{1, 6, 10, 5});
    REQUIRE(r.mode.mode_set == std::vector<int>{2});
    REQUIRE(r.window == ModeWindow{2, 2});  // stability 2, odd order: exact singleton
}

TEST_CASE("alpha at least five gets no window") {
    AnalysisReport r = analyze_star(empty_graph(5));
    REQUIRE(r.alpha == 5);
    REQUIRE_FALSE(r.window.has_value());
    REQUIRE(r.mode.unimodal);  // (1+2x)^5 happens to be unimodal; logged, not asserted
}

TEST_CASE("graph and expression analyses agree") {
    auto rng = testutil::seeded(83);
    for (int trial = 0; trial < 30; ++trial) {
        ExprPtr e = testutil::random_expr(rng, 10, 2);
        AnalysisReport via_expr = analyze_star(*e);
        AnalysisReport via_graph = analyze_star(materialize(*e));
        REQUIRE(via_expr.star_poly == via_graph.star_poly);
        REQUIRE(via_expr.alpha == via_graph.alpha);
        REQUIRE(via_expr.window_ok == via_graph.window_ok);
    }
}

TEST_CASE("midpoint inequality: direct equals closed form") {
    MidpointResult m = midpoint_inequality(IntPoly{1, 4, 6, 4, 1}, 4);
    REQUIRE(m.direct == 24);
    REQUIRE(m.closed_form == 24);

    m = midpoint_inequality(IntPoly{1, 3}, 6);
    REQUIRE(m.direct == m.closed_form);
    REQUIRE(m.direct >= 0);

    REQUIRE_THROWS_AS(midpoint_inequality(IntPoly{1, 3}, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(midpoint_inequality(IntPoly{1, 3}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(midpoint_inequality(IntPoly{1, 1, 1, 1, 1, 1}, 6),
                      std::invalid_argument);
}

TEST_CASE("midpoint inequality across random degree-4 vectors") {
    auto rng = testutil::seeded(89);
    for (int trial = 0; trial < 200; ++trial) {
        long long n = 2 * testutil::pick(rng, 2, 15);
        std::vector<Int> c{1};
        for (int k = 1; k <= 4 && k <= n; ++k) c.push_back(Int(rng() % 50));
        IntPoly s(std::move(c));
        MidpointResult m = midpoint_inequality(s, n);
        CAPTURE(n, to_string(s));
        REQUIRE(m.direct == m.closed_form);
        if (n >= 6) REQUIRE(m.direct >= 0);
    }
}

TEST_CASE("only the edgeless skeleton reaches stability four at order four") {
    int found = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Graph g = detail::graph_from_edge_mask(4, mask);
        if (alpha(g) == 4) {
            ++found;
            REQUIRE(g.edge_count() == 0);
            REQUIRE(midpoint_inequality(independence_poly(g), 4).direct == 24);
        }
    }
    REQUIRE(found == 1);
}

TEST_CASE("pendant characterization verdicts") {
    PendantVerdict v = pendant_characterization_check(path(4));
    REQUIRE(v.applicable);
    REQUIRE(v.well_covered);
    REQUIRE(v.pendant_matching);
    REQUIRE(v.consistent());

    v = pendant_characterization_check(path(5));
    REQUIRE(v.applicable);
    REQUIRE_FALSE(v.well_covered);
    REQUIRE_FALSE(v.pendant_matching);
    REQUIRE(v.consistent());

    v = pendant_characterization_check(cycle(7));  // well-covered despite no pendants
    REQUIRE_FALSE(v.applicable);
    REQUIRE(v.reason == "excluded graph C_7");

    v = pendant_characterization_check(Graph(1));
    REQUIRE_FALSE(v.applicable);
    REQUIRE(v.reason == "excluded graph K_1");

    v = pendant_characterization_check(cycle(5));
    REQUIRE_FALSE(v.applicable);
    REQUIRE(v.reason == "girth below 6");

    v = pendant_characterization_check(disjoint_union(path(2), path(2)));
    REQUIRE_FALSE(v.applicable);
    REQUIRE(v.reason == "not connected");

    v = pendant_characterization_check(cycle(6));  // applicable, both sides false
    REQUIRE(v.applicable);
    REQUIRE_FALSE(v.well_covered);
    REQUIRE_FALSE(v.pendant_matching);
    REQUIRE(v.consistent());

    v = pendant_characterization_check(corona_k1(cycle(7)));
    REQUIRE(v.applicable);  // girth 7, not 2-regular
    REQUIRE(v.well_covered);
    REQUIRE(v.pendant_matching);
    REQUIRE(v.consistent());
}

TEST_CASE("pendant characterization never fails on random trees") {
    auto rng = testutil::seeded(97);
    for (int trial = 0; trial < 100; ++trial) {
        Graph t = random_tree(rng, int(testutil::pick(rng, 2, 12)));
        PendantVerdict v = pendant_characterization_check(t);
        CAPTURE(t.edges());
        REQUIRE(v.applicable);
        REQUIRE(v.consistent());
    }
}

TEST_CASE("complete split family reports") {
    FamilyReport r = complete_split_star_report(3, 1);
    REQUIRE(r.star.star_poly == IntPoly{1, 6, 9, 4});  // the skeleton is K_3
    REQUIRE(r.ok());

    r = complete_split_star_report(6, 4);
    REQUIRE(r.star.alpha == 4);
    REQUIRE(r.ok());

    r = complete_split_star_report(5, 2);
    REQUIRE(r.star.alpha == 2);
    REQUIRE(r.star.window == ModeWindow{3, 3});
    REQUIRE(r.ok());

    REQUIRE_THROWS_AS(complete_split_graph(2, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(complete_split_graph(6, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(complete_split_graph(6, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(complete_split_graph(5, 4), std::invalid_argument);  // m > n-2
}

TEST_CASE("coronas of random isolate-free graphs are very well-covered") {
    auto rng = testutil::seeded(103);
    int done = 0;
    while (done < 40) {
        int n = int(testutil::pick(rng, 2, 10));
        Graph g = random_graph(rng, n, 1);
        bool isolate = false;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0) isolate = true;
        if (isolate) continue;
        ++done;
        Graph h = corona_k1(g);
        REQUIRE(is_very_well_covered(h));
        REQUIRE(alpha(h) == n);
    }
}
