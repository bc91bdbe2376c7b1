#include <catch2/catch_amalgamated.hpp>

#include "covpack/matching.hpp"
#include "covpack/oracle.hpp"
#include "covpack/rng.hpp"

using namespace covpack;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(i, i + 5);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return make_graph(10, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) e.emplace_back(i, j);
    return make_graph(n, e);
}

void check_valid(const Graph& g, const Matching& m) {
    int paired = 0;
    for (int v = 0; v < g.n; ++v) {
        if (m.mate[v] == -1) continue;
        REQUIRE(m.mate[m.mate[v]] == v);
        REQUIRE(has_edge(g, v, m.mate[v]));
        ++paired;
    }
    REQUIRE(paired == 2 * m.size);
    REQUIRE(static_cast<int>(m.edges.size()) == m.size);
}

}  // namespace

TEST_CASE("matching on known graphs") {
    REQUIRE(max_matching(petersen()).size == 5);
    REQUIRE(max_matching(complete(4)).size == 2);
    Graph star = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    REQUIRE(max_matching(star).size == 1);
    Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(max_matching(path).size == 2);
    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    REQUIRE(max_matching(c5).size == 2);
    Graph empty = make_graph(5, {});
    REQUIRE(max_matching(empty).size == 0);
    // two triangles joined by a bridge: blossoms on both sides
    Graph tt = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    REQUIRE(max_matching(tt).size == 3);
}

TEST_CASE("matching matches brute force on random graphs") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.below(11));  // 2..12
        double p = std::vector<double>{0.15, 0.3, 0.6}[trial % 3];
        Graph g = random_graph(n, p, rng);
        Matching m = max_matching(g);
        check_valid(g, m);
        INFO("trial " << trial << " n=" << n << " edges=" << g.edges.size());
        REQUIRE(m.size == max_matching_bruteforce(g));
    }
}

TEST_CASE("Tutte-Berge witness certifies optimality") {
    Rng rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.below(13));  // 2..14
        Graph g = random_graph(n, rng.uniform(0.1, 0.7), rng);
        Matching m = max_matching(g);
        // |M| = (n - (odd(G - A) - |A|)) / 2 exactly at the Gallai-Edmonds set
        int deficiency = tutte_berge_deficiency(g, m.witness);
        INFO("trial " << trial << " n=" << n << " |A|=" << m.witness.size());
        REQUIRE(2 * m.size == g.n - deficiency);
    }
}

TEST_CASE("Tutte-Berge deficiency examples") {
    Graph star = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    REQUIRE(tutte_berge_deficiency(star, {0}) == 4);  // 5 singletons - 1
    REQUIRE(tutte_berge_deficiency(star, {}) == 0);   // one even component
    Matching m = max_matching(star);
    REQUIRE(m.witness == std::vector<int>{0});
}

TEST_CASE("graph constructor validation") {
    REQUIRE_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
    Graph g = make_graph(3, {{2, 0}, {0, 2}, {1, 2}});  // normalized + deduped
    REQUIRE(g.edges.size() == 2);
    REQUIRE(has_edge(g, 0, 2));
    REQUIRE(has_edge(g, 2, 1));
    REQUIRE_FALSE(has_edge(g, 0, 1));
}
