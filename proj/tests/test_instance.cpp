#include <catch2/catch_amalgamated.hpp>

#include "covpack/instance.hpp"

using namespace covpack;

TEST_CASE("uniform box generator") {
    Rng rng(42);
    PointSet S = gen_uniform_box(500, rng);
    REQUIRE(S.size() == 500);
    for (const Point& p : S) {
        REQUIRE(p.size() == 2);
        REQUIRE(p[0] >= 0.0);
        REQUIRE(p[0] <= 100.0);
        REQUIRE(p[1] >= 0.0);
        REQUIRE(p[1] <= 100.0);
    }
    REQUIRE_THROWS_AS(gen_uniform_box(-1, rng), std::invalid_argument);
}

TEST_CASE("generators are deterministic in the seed") {
    Rng a(7), b(7), c(8);
    PointSet sa = gen_uniform_box(50, a);
    PointSet sb = gen_uniform_box(50, b);
    PointSet sc = gen_uniform_box(50, c);
    REQUIRE(sa == sb);
    REQUIRE(sa != sc);
}

TEST_CASE("cluster generator separates clusters") {
    Rng rng(3);
    int m = 6, k = 5;
    double spread = 1.0, separation = 100.0;
    PointSet S = gen_clusters(m, k, spread, separation, rng);
    REQUIRE(S.size() == static_cast<std::size_t>(m * k));
    // points come out cluster by cluster: k consecutive points each
    for (int ci = 0; ci < m; ++ci)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                double d = dist(S[ci * k + i], S[ci * k + j]);
                REQUIRE(d <= 2.0 * spread + 1e-12);
            }
    for (int ci = 0; ci < m; ++ci)
        for (int cj = ci + 1; cj < m; ++cj)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    double d = dist(S[ci * k + i], S[cj * k + j]);
                    REQUIRE(d >= separation - 1e-12);
                }
    REQUIRE_THROWS_AS(gen_clusters(0, 5, 1.0, 10.0, rng), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_clusters(3, 5, -1.0, 10.0, rng), std::invalid_argument);
}

TEST_CASE("grid generator") {
    Rng rng(9);
    PointSet S = gen_grid(4, 0.0, rng);
    REQUIRE(S.size() == 16);
    // jitter 0 gives the exact integer lattice
    for (const Point& p : S) {
        REQUIRE(p[0] == Catch::Approx(std::round(p[0])).margin(0.0));
        REQUIRE(p[1] == Catch::Approx(std::round(p[1])).margin(0.0));
    }
    PointSet J = gen_grid(4, 0.05, rng);
    REQUIRE(J.size() == 16);
    bool moved = false;
    for (const Point& p : J)
        if (p[0] != std::round(p[0])) moved = true;
    REQUIRE(moved);
}

TEST_CASE("annulus generator") {
    Rng rng(12);
    PointSet S = gen_annulus(300, rng, 50.0, 100.0);
    REQUIRE(S.size() == 300);
    for (const Point& p : S) {
        double r = norm(p);
        REQUIRE(r >= 50.0 - 1e-9);
        REQUIRE(r <= 100.0 + 1e-9);
    }
}

TEST_CASE("jitter helper") {
    Rng rng(15);
    PointSet S = gen_uniform_box(20, rng);
    PointSet T = S;
    apply_jitter(T, 0.0, rng);
    REQUIRE(T == S);
    apply_jitter(T, 0.5, rng);
    REQUIRE(T != S);
    REQUIRE(T.size() == S.size());
}
