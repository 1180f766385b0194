#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spex/constructions.hpp"
#include "spex/errors.hpp"
#include "spex/spectral.hpp"
#include "spex/switching.hpp"

using namespace spex;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph random_connected(std::mt19937_64& rng, int n, int percent) {
    while (true) {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if ((int)(rng() % 100) < percent) e.emplace_back(u, v);
        Graph g(n, e);
        if (is_connected(g)) return g;
    }
}

std::vector<SwitchMove> valid_switches(const Graph& g) {
    std::vector<SwitchMove> out;
    for (int s = 0; s < g.n(); s++)
        for (int t = 0; t < g.n(); t++)
            for (int v = 0; v < g.n(); v++)
                for (int u = 0; u < g.n(); u++) {
                    SwitchMove m{s, t, v, u};
                    if (switch_valid(g, m)) out.push_back(m);
                }
    return out;
}

}  // namespace

TEST_CASE("rotate on P4 (equal endpoint components force an increase)") {
    Graph p4 = path(4);
    auto before = perron(p4, 1e-12);
    RotationMove m{1, 0, 3};
    CHECK(before.x[3] >= before.x[0] - 1e-12);  // lemma hypothesis with equality
    Graph after = rotate(p4, m);
    CHECK(after.m() == p4.m());
    CHECK(after.has_edge(1, 3));
    CHECK_FALSE(after.has_edge(0, 1));
    // the result is a triangle plus an isolated vertex; still a strict gain
    CHECK_FALSE(is_connected(after));
}

TEST_CASE("rotate on C4 gives the paw, 2 -> 2.17...") {
    Graph c4 = cycle(4);
    auto pd = perron(c4, 1e-12);
    CHECK(std::fabs(pd.x[2] - pd.x[1]) < 1e-12);  // x_w = x_v on the cycle
    CHECK(pd.lambda1 == doctest::Approx(2.0).epsilon(1e-12));
    Graph paw = rotate(c4, {0, 1, 2});
    CHECK(is_connected(paw));
    double lam2 = perron(paw, 1e-12).lambda1;
    CHECK(lam2 == doctest::Approx(2.170086486626034).epsilon(1e-11));
    CHECK(lam2 > pd.lambda1);
}

TEST_CASE("rotate rejects invalid moves") {
    Graph c4 = cycle(4);
    CHECK_THROWS_AS(rotate(c4, {0, 1, 3}), input_error);  // uw already an edge
    CHECK_THROWS_AS(rotate(c4, {0, 2, 1}), input_error);  // uv not an edge
    CHECK_THROWS_AS(rotate(c4, {0, 1, 1}), input_error);  // v == w
}

TEST_CASE("local_switch on C6 preserves degrees; connectivity is not promised") {
    Graph c6 = cycle(6);
    SwitchMove m{0, 1, 3, 4};
    CHECK(switch_valid(c6, m));
    Graph h = local_switch(c6, m);
    CHECK(degree_profile(h).sorted_degrees == std::vector<int>(6, 2));
    CHECK_FALSE(h.has_edge(3, 4));
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK(h.has_edge(0, 3));
    CHECK(h.has_edge(1, 4));
}

TEST_CASE("local_switch joins two triangles into a connected 2-regular graph") {
    Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    // remove {0,1} and {3,4}, add {3,1}... pick (s,t,v,u) = (3,4,1,0):
    // removes uv = {0,1} and st = {3,4}; adds sv = {3,1}, tu = {4,0}
    Graph h = local_switch(two, {3, 4, 1, 0});
    CHECK(is_connected(h));
    CHECK(degree_profile(h).sorted_degrees == std::vector<int>(6, 2));
}

TEST_CASE("local_switch rejects invalid moves") {
    Graph c6 = cycle(6);
    CHECK_THROWS_AS(local_switch(c6, {0, 1, 5, 4}), input_error);  // sv already present
    CHECK_THROWS_AS(local_switch(c6, {1, 2, 3, 2}), input_error);  // repeated vertex
    CHECK_THROWS_AS(local_switch(c6, {0, 1, 3, 2}), input_error);  // tu already present
}

TEST_CASE("is_proper_switch") {
    // symmetric cycle: every valid move is proper (all components equal)
    Graph c6 = cycle(6);
    auto pd = perron(c6, 1e-12);
    for (const auto& m : valid_switches(c6)) CHECK(is_proper_switch(pd, m));

    // P5: (s,t,v,u) = (3,4,1,0) has x_s > x_u and x_v > x_t -> proper
    Graph p5 = path(5);
    auto pp = perron(p5, 1e-12);
    SwitchMove proper{3, 4, 1, 0};
    REQUIRE(switch_valid(p5, proper));
    CHECK(pp.x[3] > pp.x[0]);
    CHECK(pp.x[1] > pp.x[4]);
    CHECK(is_proper_switch(pp, proper));

    // (s,t,v,u) = (1,0,3,2): product strictly negative -> not proper
    SwitchMove improper{1, 0, 3, 2};
    REQUIRE(switch_valid(p5, improper));
    CHECK((pp.x[1] - pp.x[2]) * (pp.x[3] - pp.x[0]) < 0);
    CHECK_FALSE(is_proper_switch(pp, improper));
}

TEST_CASE("random switches preserve the degree profile exactly") {
    std::mt19937_64 rng(61);
    long long done = 0;
    while (done < 10000) {
        Graph g = random_connected(rng, 7 + (int)(rng() % 6), 40);
        auto moves = valid_switches(g);
        if (moves.empty()) continue;
        auto before = degree_profile(g).sorted_degrees;
        for (int r = 0; r < 5 && done < 10000; r++, done++) {
            const auto& m = moves[rng() % moves.size()];
            Graph h = local_switch(g, m);
            CHECK(degree_profile(h).sorted_degrees == before);
            CHECK(h.m() == g.m());
        }
    }
}

TEST_CASE("proper switches never lower lambda1 (on connected results)") {
    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 300) {
        Graph g = random_connected(rng, 7 + (int)(rng() % 5), 40);
        auto pd = perron(g, 1e-12);
        auto moves = valid_switches(g);
        for (const auto& m : moves) {
            if (!is_proper_switch(pd, m)) continue;
            Graph h = local_switch(g, m);
            if (!is_connected(h)) continue;
            CHECK(perron(h, 1e-12).lambda1 >= pd.lambda1 - 1e-9);
            if (++done >= 300) break;
        }
    }
}

TEST_CASE("rotations toward a no-smaller component strictly raise lambda1") {
    std::mt19937_64 rng(71);
    int done = 0;
    while (done < 300) {
        Graph g = random_connected(rng, 7 + (int)(rng() % 5), 35);
        auto pd = perron(g, 1e-12);
        for (int u = 0; u < g.n() && done < 300; u++)
            for (int v : g.neighbors(u)) {
                for (int w = 0; w < g.n(); w++) {
                    RotationMove m{u, v, w};
                    if (!rotation_valid(g, m)) continue;
                    if (pd.x[w] < pd.x[v] + 1e-9) continue;
                    Graph h = rotate(g, m);
                    if (!is_connected(h)) continue;
                    CHECK(perron(h, 1e-12).lambda1 > pd.lambda1);
                    if (++done >= 300) break;
                }
                if (done >= 300) break;
            }
    }
}

TEST_CASE("improving_search") {
    // budget 0 returns the input unchanged
    Graph g = extremal_delta3(9);
    Graph same = improving_search(g, 3, 0);
    CHECK(same.edges() == g.edges());

    // starting at the extremal graph there is no improving move
    double lam = perron(g, 1e-12).lambda1;
    Graph out = improving_search(g, 3, 50);
    CHECK(std::fabs(perron(out, 1e-12).lambda1 - lam) <= 1e-9);

    // random subcubic nonregular seeds never beat the known maximum
    std::mt19937_64 rng(73);
    int done = 0;
    while (done < 3) {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < 9; u++)
            for (int v = u + 1; v < 9; v++)
                if (rng() % 100 < 30) e.emplace_back(u, v);
        Graph seed(9, e);
        auto p = degree_profile(seed);
        if (p.max_deg != 3 || p.is_regular || !is_connected(seed)) continue;
        Graph better = improving_search(seed, 3, 100);
        CHECK(perron(better, 1e-12).lambda1 <= lam + 1e-9);
        auto prof = degree_profile(better);
        CHECK(prof.max_deg == 3);
        CHECK_FALSE(prof.is_regular);
        CHECK(is_connected(better));
        done++;
    }

    CHECK_THROWS_AS(improving_search(cycle(5), 2, 5), input_error);  // regular input
}
