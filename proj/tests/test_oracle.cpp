#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alphabound/bounds.hpp"
#include "alphabound/extremal.hpp"
#include "alphabound/oracle.hpp"
#include "test_util.hpp"

using namespace alphabound;

TEST_CASE("known values") {
    CHECK(alpha_exact(gen_basic(BasicFamily::Complete, 4)).alpha == 1);
    CHECK(alpha_exact(gen_basic(BasicFamily::Cycle, 9)).alpha == 4);
    CHECK(alpha_exact(gen_upper_extremal(7, 3)).alpha == 5);
    CHECK(alpha_exact(gen_lower_extremal(7, 3)).alpha == 3);
}

TEST_CASE("witness is a valid maximum set") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> size(1, 12);
        std::bernoulli_distribution coin(0.25);
        int n = size(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        auto exact = alpha_exact(g);
        CHECK(is_independent_set(g, exact.witness));
        CHECK(static_cast<int>(exact.witness.size()) == exact.alpha);
        CHECK(exact.alpha == testutil::naive_alpha(g));
        CHECK(is_maximal_independent(g, exact.witness));
        CHECK(degree_sum_check(g, exact.witness).ok);
    }
}

TEST_CASE("size limit") {
    CHECK_THROWS_AS(alpha_exact(Graph(41, {}), 40), std::invalid_argument);
    CHECK(alpha_exact(Graph(40, {}), 40).alpha == 40);
    CHECK_THROWS_AS(alpha_exact(Graph(5, {}), 64), std::invalid_argument);
}

TEST_CASE("maximal independent sets") {
    Graph c9 = gen_basic(BasicFamily::Cycle, 9);
    CHECK(is_maximal_independent(gen_circulant_example(1), {1, 4}));
    CHECK(is_maximal_independent(c9, {1, 3, 5, 7}));
    CHECK_FALSE(is_maximal_independent(c9, {1, 3}));  // vertex 6 undominated
    CHECK_FALSE(is_maximal_independent(c9, {1, 2}));  // not independent
}

TEST_CASE("handles larger sparse graphs") {
    std::mt19937_64 rng(99);
    Graph g = testutil::random_connected(rng, 40, 0.05);
    auto exact = alpha_exact(g);
    CHECK(exact.alpha >= lower_bound_connected(40, g.max_degree()));
    CHECK(is_independent_set(g, exact.witness));
}
