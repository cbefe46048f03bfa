#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "indpoly/indpoly.hpp"

using namespace indpoly;

TEST_CASE("exhaustive sweep over all labeled graphs up to order four") {
    SweepParams p;
    p.n_max = 4;
    SweepReport rep = sweep_verify(p);
    REQUIRE(rep.graphs_seen == 1 + 2 + 8 + 64);
    REQUIRE(rep.ok());
    REQUIRE(rep.violations.empty());
    REQUIRE(rep.by_alpha[1] == 4);  // exactly the complete graphs K_1..K_4
    REQUIRE(rep.by_alpha[4] == 1);  // only the edgeless graph on four vertices
    REQUIRE(rep.alpha_ge5 == 0);
    REQUIRE(rep.by_alpha[1] + rep.by_alpha[2] + rep.by_alpha[3] + rep.by_alpha[4] ==
            rep.graphs_seen);
}

TEST_CASE("exhaustive sweep is capped at order seven") {
    SweepParams p;
    p.n_max = 8;
    REQUIRE_THROWS_AS(sweep_verify(p), cap_exceeded);
    p.n_max = 99;
    REQUIRE_THROWS_AS(sweep_verify(p), cap_exceeded);
}

TEST_CASE("sampled sweeps are deterministic in the seed") {
    SweepParams p;
    p.mode = SweepMode::sample;
    p.n_max = 10;
    p.samples = 500;
    p.seed = 424242;
    SweepReport a = sweep_verify(p);
    SweepReport b = sweep_verify(p);
    REQUIRE(to_json(a).dump() == to_json(b).dump());
    REQUIRE(a.graphs_seen == 500);
    REQUIRE(a.ok());

    p.seed = 424243;  // a different seed must be allowed to differ
    SweepReport c = sweep_verify(p);
    REQUIRE(c.ok());
    REQUIRE(c.graphs_seen == 500);
}

TEST_CASE("sampled sweep rejects a non-positive order bound") {
    SweepParams p;
    p.mode = SweepMode::sample;
    p.n_max = 0;
    REQUIRE_THROWS_AS(sweep_verify(p), std::invalid_argument);
}

TEST_CASE("CSV export lists one row per graph") {
    SweepParams p;
    p.n_max = 3;
    p.collect_rows = true;
    SweepReport rep = sweep_verify(p);
    std::string csv = to_csv(rep);

    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 1 + 1 + 2 + 8);  // header + one row per graph
    REQUIRE(lines[0] == "n,alpha,edges,unimodal,mode_lo,mode_hi,window_lo,window_hi,ok");
    REQUIRE(lines[1] == "1,1,0,1,1,1,1,1,1");  // the lone vertex
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CAPTURE(lines[i]);
        REQUIRE(lines[i].back() == '1');  // every row ok
    }
}

TEST_CASE("rows are only collected on request") {
    SweepParams p;
    p.n_max = 3;
    SweepReport rep = sweep_verify(p);
    REQUIRE(rep.rows.empty());
}

TEST_CASE("report JSON carries the sweep parameters and tallies") {
    SweepParams p;
    p.mode = SweepMode::sample;
    p.n_max = 6;
    p.samples = 100;
    p.seed = 7;
    nlohmann::json j = to_json(sweep_verify(p));
    REQUIRE(j["mode"] == "sample");
    REQUIRE(j["n_max"] == 6);
    REQUIRE(j["samples"] == 100);
    REQUIRE(j["seed"] == 7);
    REQUIRE(j["graphs_seen"] == 100);
    REQUIRE(j["ok"] == true);
    REQUIRE(j["violations"].is_array());
    REQUIRE(j["by_alpha"].contains("4"));

    p.mode = SweepMode::exhaustive;
    p.n_max = 2;
    j = to_json(sweep_verify(p));
    REQUIRE(j["mode"] == "exhaustive");
    REQUIRE_FALSE(j.contains("seed"));
}

TEST_CASE("random graphs are reproducible and respect the edge probability") {
    auto a = testutil::seeded(7);
    auto b = testutil::seeded(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(a, 12, 1 + trial % 3);
        Graph h = random_graph(b, 12, 1 + trial % 3);
        REQUIRE(g.edges() == h.edges());
    }

    // With p = 1/2 on 40 vertices the edge count concentrates near 390.
    auto rng = testutil::seeded(11);
    long long total = 0;
    for (int trial = 0; trial < 30; ++trial) total += random_graph(rng, 40, 1).edge_count();
    double mean = double(total) / 30.0;
    REQUIRE(mean > 330.0);
    REQUIRE(mean < 450.0);

    REQUIRE_THROWS_AS(random_graph(rng, 5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(random_graph(rng, 5, 63), std::invalid_argument);
    REQUIRE_THROWS_AS(random_graph(rng, -1, 1), std::invalid_argument);
}

TEST_CASE("random trees are trees") {
    auto rng = testutil::seeded(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = int(testutil::pick(rng, 1, 14));
        Graph t = random_tree(rng, n);
        CAPTURE(n, t.edges());
        REQUIRE(t.vertex_count() == n);
        REQUIRE(t.edge_count() == n - 1);
        REQUIRE(is_connected(t));
    }
    REQUIRE_THROWS_AS(random_tree(rng, 0), std::invalid_argument);
}

TEST_CASE("random tree generation reaches every labeled tree on four vertices") {
    // There are 4^2 = 16 labeled trees on four vertices; a correct uniform
    // decoder must hit all of them quickly.
    auto rng = testutil::seeded(17);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (int trial = 0; trial < 2000; ++trial) seen.insert(random_tree(rng, 4).edges());
    REQUIRE(seen.size() == 16);
}

TEST_CASE("sampled sweep survives larger orders with sparse probabilities") {
    SweepParams p;
    p.mode = SweepMode::sample;
    p.n_max = 12;
    p.samples = 300;
    p.seed = 20260814;
    SweepReport rep = sweep_verify(p);
    REQUIRE(rep.graphs_seen == 300);
    REQUIRE(rep.ok());
    // Sparse samples at order 12 routinely exceed stability number 4.
    REQUIRE(rep.alpha_ge5 > 0);
}
