#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spex/errors.hpp"
#include "spex/graph_io.hpp"

using namespace spex;

TEST_CASE("graph6 encodes the standard examples bit-exactly") {
    Graph k3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(to_graph6(k3) == "Bw");
    std::vector<std::pair<int, int>> k4;
    for (int u = 0; u < 4; u++)
        for (int v = u + 1; v < 4; v++) k4.emplace_back(u, v);
    CHECK(to_graph6(Graph(4, k4)) == "C~");
    Graph empty5(5, {});
    CHECK(to_graph6(empty5) == "D??");
}

TEST_CASE("graph6 round-trips") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; t++) {
        int n = 1 + (int)(rng() % 20);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng() % 3 == 0) e.emplace_back(u, v);
        Graph g(n, e);
        Graph h = from_graph6(to_graph6(g));
        CHECK(h.n() == g.n());
        CHECK(h.edges() == g.edges());
    }
}

TEST_CASE("edge list round-trips and validates") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph h = from_edge_list(to_edge_list(g));
    CHECK(h.edges() == g.edges());
    CHECK(to_edge_list(g).substr(0, 4) == "4 4\n");
    CHECK_THROWS_AS(from_edge_list("3"), input_error);
    CHECK_THROWS_AS(from_edge_list("2 1\n0 5\n"), input_error);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), input_error);
    CHECK_THROWS_AS(from_graph6("D"), input_error);  // truncated payload
}
