#include "closurelab/named_graphs.hpp"
#include "closurelab/stats.hpp"
#include "oracle_helpers.hpp"

#include <catch2/catch.hpp>

#include <cmath>

using namespace closurelab;

TEST_CASE("graph stats on named graphs") {
    auto c6 = graph_stats(cycle_graph(6));
    CHECK(c6.min_degree == 2);
    CHECK(c6.max_degree == 2);
    CHECK(c6.maximum_matching_size == 3);
    CHECK(c6.independence_number == 3);
    CHECK(c6.distances_available);

    auto k4 = graph_stats(complete_graph(4));
    CHECK(k4.min_degree == 3);
    CHECK(k4.max_degree == 3);
    CHECK(k4.maximum_matching_size == 2);
    CHECK(k4.independence_number == 1);

    auto m3 = graph_stats(matching_graph(3));
    CHECK(m3.min_degree == 1);
    CHECK(m3.max_degree == 1);
    CHECK(m3.maximum_matching_size == 3);
    CHECK(m3.independence_number == 3);
    CHECK_FALSE(m3.distances_available);

    // above the cap the exact value is reported as absent
    CHECK_FALSE(graph_stats(cycle_graph(12), 10).independence_number.has_value());
}

TEST_CASE("matching handles odd components") {
    // C5 plus C7: maximum matching 2 + 3
    Graph g = disjoint_union(cycle_graph(5), cycle_graph(7));
    CHECK(maximum_matching_size(g) == 5);
    CHECK(maximum_matching_size(petersen_graph()) == 5);
}

TEST_CASE("matching and independence agree with brute force") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.4, rng());
        CHECK(maximum_matching_size(g) == testutil::brute_matching(g));
        CHECK(independence_number(g) == testutil::brute_alpha(g));
    }
}

TEST_CASE("independence bound for high-min-degree low-codegree graphs") {
    // delta(g) >= 5 and 2*codeg + 2 < delta(g) force alpha <= n - sqrt(n)/2
    Graph syl = sylvester_graph();
    auto st = graph_stats(syl);
    REQUIRE(st.independence_number.has_value());
    CHECK(st.min_degree >= 5);
    CHECK(2 * max_codegree(syl) + 2 < st.min_degree);
    double n = syl.vertex_count();
    CHECK(*st.independence_number <= n - 0.5 * std::sqrt(n));
}
