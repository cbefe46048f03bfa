#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "indpoly/indpoly.hpp"

using namespace indpoly;

TEST_CASE("binomial coefficients") {
    REQUIRE(binomial(0, 0) == 1);
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(10, 5) == 252);
    REQUIRE(binomial(7, 0) == 1);
    REQUIRE(binomial(7, 7) == 1);
    REQUIRE(binomial(7, 8) == 0);
    REQUIRE(binomial(7, -1) == 0);
    REQUIRE(binomial(70, 35) == binomial(69, 34) + binomial(69, 35));  // Pascal
    REQUIRE(binomial(70, 35) > Int("9223372036854775807"));           // past 64 bits
    REQUIRE(binomial(200, 100) == pow(IntPoly{1, 1}, 200).coeff(100));

    REQUIRE(binomial_row(5) == std::vector<Int>{1, 5, 10, 10, 5, 1});
    REQUIRE(binomial_row(0) == std::vector<Int>{1});

    auto rng = testutil::seeded(3);
    for (int trial = 0; trial < 40; ++trial) {
        long long n = rng() % 80;
        auto row = binomial_row(n);
        for (long long k = 0; k <= n; ++k) REQUIRE(row[std::size_t(k)] == binomial(n, k));
    }
}

TEST_CASE("forward transform reproduces corona polynomials") {
    REQUIRE(forward_transform(IntPoly{1, 3}, 3) == IntPoly{1, 6, 9, 4});
    REQUIRE(forward_transform(IntPoly{1, 4, 3}, 4) == IntPoly{1, 8, 21, 22, 8});
    REQUIRE(forward_transform(IntPoly{1, 4, 1}, 4) == IntPoly{1, 8, 19, 18, 6});
    REQUIRE(forward_transform(IntPoly{1, 5, 6, 4, 1}, 5) == IntPoly{1, 10, 36, 62, 52, 17});
    REQUIRE(forward_transform(IntPoly{1, 4, 6, 4, 1}, 4) == IntPoly{1, 8, 24, 32, 16});
    REQUIRE(forward_transform(IntPoly{1}, 0) == IntPoly{1});
    REQUIRE(forward_transform(IntPoly{1}, 3) == IntPoly{1, 3, 3, 1});  // E_3 pendant-free part
}

TEST_CASE("forward transform rejects degree above the order") {
    REQUIRE_THROWS_AS(forward_transform(IntPoly{1, 2, 1}, 1), std::invalid_argument);
    REQUIRE_NOTHROW(forward_transform(IntPoly{1, 2, 1}, 2));
}

TEST_CASE("inverse undoes forward exactly") {
    auto rng = testutil::seeded(17);
    for (int trial = 0; trial < 300; ++trial) {
        long long n = rng() % 13;
        int deg = int(rng() % std::uint64_t(n + 1));
        std::vector<Int> c(std::size_t(deg) + 1);
        for (auto& x : c) x = Int(rng() % 1000) - 200;  // negatives allowed: linear identity
        IntPoly s(std::move(c));
        CAPTURE(n, to_string(s));
        REQUIRE(inverse_transform(forward_transform(s, n), n) == s);
    }
}

TEST_CASE("inverse of a counting vector may leave the counting cone") {
    REQUIRE(inverse_transform(IntPoly{1, 1}, 2) == IntPoly{1, -1});
    REQUIRE(forward_transform(IntPoly{1, -1}, 2) == IntPoly{1, 1});
}

TEST_CASE("matrix view agrees with the streaming transform") {
    REQUIRE(transform_matrix(3, 4).entry(2, 1) == binomial(2, 1));
    REQUIRE(transform_matrix(3, 4).entry(1, 2) == 0);  // lower triangular

    auto rng = testutil::seeded(23);
    for (int trial = 0; trial < 50; ++trial) {
        long long n = rng() % 10;
        TransformMatrix a = transform_matrix(n, n + 1);
        int deg = int(rng() % std::uint64_t(n + 1));
        std::vector<Int> c(std::size_t(deg) + 1);
        for (auto& x : c) x = Int(rng() % 50);
        IntPoly s(std::move(c));
        REQUIRE(a.apply(s) == forward_transform(s, n));
    }
}

TEST_CASE("matrix columns are unimodal") {
    for (long long n : {4, 7, 10}) {
        TransformMatrix a = transform_matrix(n, n + 1);
        for (long long j = 0; j <= n; ++j) {
            ModeReport r = unimodality(IntPoly(a.column(j)));
            CAPTURE(n, j);
            REQUIRE(r.unimodal);
        }
    }
}

TEST_CASE("transform equals the substitution route (1+x)^n s(x/(1+x))") {
    auto rng = testutil::seeded(29);
    const IntPoly one_plus_x{1, 1};
    for (int trial = 0; trial < 60; ++trial) {
        long long n = rng() % 11;
        int deg = int(rng() % std::uint64_t(n + 1));
        std::vector<Int> c(std::size_t(deg) + 1);
        for (auto& x : c) x = Int(rng() % 20);
        IntPoly s(std::move(c));

        IntPoly lifted;  // sum_j s_j x^j (1+x)^(n-j)
        for (int j = 0; j <= s.degree(); ++j) {
            IntPoly term = s.coeff(j) * pow(one_plus_x, n - j);
            for (int k = 0; k < j; ++k) term = shift_x(term);
            lifted = lifted + term;
        }
        REQUIRE(forward_transform(s, n) == lifted);
    }
}

TEST_CASE("transform matches growing a concrete corona") {
    auto rng = testutil::seeded(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 9);
        Graph g = random_graph(rng, n, 1 + trial % 3);
        REQUIRE(forward_transform(independence_poly(g), n) ==
                independence_poly(corona_k1(g)));
    }
}
