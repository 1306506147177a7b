#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qaut/graph.hpp"

using namespace qaut;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution edge(0.4);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("circulant construction") {
    Graph g = from_circulant_spec(make_circulant_spec(6, {2}));
    CHECK(g.edge_count() == 12);

    Graph c13 = from_circulant_spec(make_circulant_spec(13, {3, 4}));
    for (int i = 0; i < 13; ++i) CHECK(c13.degree(i) == 6);
    CHECK(c13.neighbors(0) == std::vector<int>{1, 3, 4, 9, 10, 12});

    Graph cycle = from_circulant_spec(make_circulant_spec(9, {}));
    for (int i = 0; i < 9; ++i) CHECK(cycle.degree(i) == 2);
}

TEST_CASE("circulant specs canonicalize and validate") {
    CHECK(make_circulant_spec(19, {1, 7, 8}).jumps == std::vector<int>{7, 8});
    CHECK(make_circulant_spec(19, {8, 7, 7}).jumps == std::vector<int>{7, 8});
    CHECK_THROWS_AS(make_circulant_spec(13, {7}), std::invalid_argument);
    CHECK(parse_circulant_string("c13(3,4)").to_string() == "C13(3,4)");
    CHECK(parse_circulant_string("C19(1,7,8)").to_string() == "C19(7,8)");
    CHECK_THROWS_AS(parse_circulant_string("C13(7)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circulant_string("13(2)"), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(7)).edge_count() == 0);

    // the complement of the 6-vertex jump-2 graph is a perfect matching
    Graph m = complement(from_circulant_spec(make_circulant_spec(6, {2})));
    CHECK(m.edge_count() == 3);
    CHECK(m.adjacent(0, 3));
    CHECK(m.adjacent(1, 4));
    CHECK(m.adjacent(2, 5));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(9, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("prism product") {
    Graph pr = cartesian_product_with_edge(from_circulant_spec(make_circulant_spec(6, {})));
    CHECK(pr.size() == 12);
    CHECK(pr.edge_count() == 18);
    for (int i = 0; i < 12; ++i) CHECK(pr.degree(i) == 3);
    CHECK(pr.min_neighbor(0) == 1);

    CHECK(cartesian_product_with_edge(Graph(1)).edge_count() == 1);
    CHECK(cartesian_product_with_edge(complete_graph(3)).edge_count() == 9);
}

TEST_CASE("prism equals its published edge list") {
    // the 12-vertex drawing: outer even cycle, inner odd cycle, rungs
    std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 5}, {5, 7},  {7, 9},  {9, 11}, {11, 1},
                                              {0, 2}, {2, 4}, {4, 6},  {6, 8},  {8, 10}, {10, 0},
                                              {0, 1}, {6, 7}, {10, 11}, {8, 9}, {4, 5},  {2, 3}};
    CHECK(from_edge_list(12, edges) ==
          cartesian_product_with_edge(from_circulant_spec(make_circulant_spec(6, {}))));
}

TEST_CASE("edge list construction and validation") {
    Graph t = from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(t.is_complete());
    CHECK_THROWS_AS(from_edge_list(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("parsers") {
    Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_AS(parse_edge_list("4 3\n0 1\n"), std::invalid_argument);

    Graph a = parse_adjacency("010\n101\n010\n");
    CHECK(a.edge_count() == 2);
    CHECK_THROWS_AS(parse_adjacency("01\n00\n"), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(parse_adjacency("10\n01\n"), std::invalid_argument);  // loops
    CHECK_THROWS_AS(parse_adjacency("012\n100\n200\n"), std::invalid_argument);
}

TEST_CASE("circulant graphs satisfy the shift law") {
    for (auto [n, jumps] : std::vector<std::pair<int, std::vector<int>>>{
             {13, {3, 4}}, {17, {2, 4, 8}}, {12, {3, 4}}, {9, {}}}) {
        Graph g = from_circulant_spec(make_circulant_spec(n, jumps));
        CHECK(g.is_circulant());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(g.adjacent(i, j) == g.adjacent((i + 1) % n, (j + 1) % n));
    }
    CHECK_FALSE(from_edge_list(3, {{0, 1}, {1, 2}}).is_circulant());
}
