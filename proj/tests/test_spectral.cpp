#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spex/constructions.hpp"
#include "spex/errors.hpp"
#include "spex/spectral.hpp"

using namespace spex;

namespace {

const double PI = std::acos(-1.0);

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

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

}  // namespace

TEST_CASE("perron on paths matches 2cos(pi/(n+1))") {
    for (int n : {2, 5, 10, 25, 50}) {
        auto pd = perron(path(n), 1e-12);
        CHECK(std::fabs(pd.lambda1 - 2 * std::cos(PI / (n + 1))) < 1e-10);
        CHECK(pd.residual <= 1e-12);
        for (double t : pd.x) CHECK(t > 0);
        double nrm = 0;
        for (double t : pd.x) nrm += t * t;
        CHECK(std::fabs(std::sqrt(nrm) - 1.0) <= 1e-12);
    }
    // P10 pinned value
    CHECK(perron(path(10)).lambda1 == doctest::Approx(1.9189859472289947).epsilon(1e-12));
}

TEST_CASE("perron on K4 minus an edge and on K5") {
    CHECK(perron(k4_minus_edge()).lambda1 ==
          doctest::Approx((1 + std::sqrt(17.0)) / 2).epsilon(1e-12));
    auto pd = perron(complete(5));
    CHECK(pd.lambda1 == doctest::Approx(4.0).epsilon(1e-12));
    for (double t : pd.x) CHECK(t == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-10));
}

TEST_CASE("perron error taxonomy") {
    Graph dis(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(perron(dis), graph_domain_error);
    CHECK_THROWS_AS(perron(path(3), -1.0), input_error);
    CHECK_THROWS_AS(perron(path(40), 1e-14, 5), convergence_error);
    try {
        perron(path(40), 1e-14, 5);
    } catch (const convergence_error& e) {
        CHECK(e.best_lambda > 1.0);  // carries a usable estimate
    }
}

TEST_CASE("perron_auto agrees with the power iteration") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; t++) {
        Graph g = random_connected(rng, 8 + (int)(rng() % 20), 20);
        double a = perron(g, 1e-12).lambda1;
        double b = perron_auto(g, 1e-12).lambda1;
        CHECK(std::fabs(a - b) < 1e-10);
    }
    // structured families where the quotient path actually engages
    for (int n : {101, 202}) {
        Graph g = (n % 2 == 1) ? extremal_delta3(n) : extremal_delta4(n);
        auto pd = perron_auto(g, 1e-12);
        CHECK(pd.residual <= 1e-12);
        auto pd2 = perron(g, 1e-10);
        CHECK(std::fabs(pd.lambda1 - pd2.lambda1) < 1e-8);
    }
}

TEST_CASE("equitable partition is equitable") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; t++) {
        Graph g = random_connected(rng, 6 + (int)(rng() % 12), 30);
        auto cell = equitable_partition(g);
        int k = 0;
        for (int c : cell) k = std::max(k, c + 1);
        // every vertex of a cell sees each cell with one common multiplicity
        std::vector<std::vector<int>> expect(k);
        std::vector<char> have(k, 0);
        for (int v = 0; v < g.n(); v++) {
            std::vector<int> counts(k, 0);
            for (int u : g.neighbors(v)) counts[cell[u]]++;
            if (!have[cell[v]]) {
                expect[cell[v]] = counts;
                have[cell[v]] = 1;
            } else {
                CHECK(expect[cell[v]] == counts);
            }
        }
    }
}

TEST_CASE("gap identities vanish on regular graphs and stay small elsewhere") {
    auto pd = perron(complete(5));
    auto [re, rs] = gap_identities_residual(complete(5), pd, 4);
    CHECK(re < 1e-12);
    CHECK(rs < 1e-12);

    auto pd2 = perron(k4_minus_edge(), 1e-12);
    auto [re2, rs2] = gap_identities_residual(k4_minus_edge(), pd2, 3);
    CHECK(re2 <= 1e-9);
    CHECK(rs2 <= 1e-9);

    Graph fig5 = extremal_delta3(12);
    auto pd3 = perron(fig5, 1e-12);
    auto [re3, rs3] = gap_identities_residual(fig5, pd3, 3);
    CHECK(re3 <= 1e-9);
    CHECK(rs3 <= 1e-9);
}

TEST_CASE("identity residuals scale with the solver tolerance") {
    Graph g = extremal_delta3(16);
    for (double tol : {1e-8, 1e-10, 1e-12}) {
        auto pd = perron(g, tol);
        auto [re, rs] = gap_identities_residual(g, pd, 3);
        CHECK(re <= 50 * tol);
        CHECK(rs <= 50 * tol);
    }
}

TEST_CASE("rayleigh_upper_gap") {
    Graph g = k4_minus_edge();
    // all-ones vector: (0+0+1+1)/4 = 0.5, and L*1 = 0
    GapBoundInput in{{1, 1, 1, 1}, 3};
    CHECK(rayleigh_upper_gap(g, in) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(0.5 >= 3 - perron(g).lambda1);

    // the Perron vector attains the gap exactly
    auto pd = perron(g, 1e-13);
    CHECK(rayleigh_upper_gap(g, {pd.x, 3}) ==
          doctest::Approx(3 - pd.lambda1).epsilon(1e-9));

    CHECK_THROWS_AS(rayleigh_upper_gap(g, {{0, 0, 0, 0}, 3}), input_error);
}

TEST_CASE("rayleigh_upper_gap bounds the gap for random vectors") {
    std::mt19937_64 rng(47);
    int checked = 0;
    while (checked < 1000) {
        Graph g = random_connected(rng, 5 + (int)(rng() % 10), 35);
        auto prof = degree_profile(g);
        double lam = perron(g, 1e-12).lambda1;
        for (int r = 0; r < 10 && checked < 1000; r++, checked++) {
            std::vector<double> y(g.n());
            for (double& t : y) t = (double)(rng() % 2001) / 1000.0 - 1.0;
            bool allzero = true;
            for (double t : y) allzero = allzero && t == 0.0;
            if (allzero) y[0] = 1.0;
            double bound = rayleigh_upper_gap(g, {y, prof.max_deg});
            CHECK(bound >= prof.max_deg - lam - 1e-9);
        }
    }
}

TEST_CASE("lambda1 is strictly monotone under edge addition") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 60) {
        Graph g = random_connected(rng, 6 + (int)(rng() % 8), 30);
        int u = (int)(rng() % g.n()), v = (int)(rng() % g.n());
        if (u == v || g.has_edge(u, v)) continue;
        auto e = g.edges();
        e.emplace_back(u, v);
        Graph h(g.n(), e);
        CHECK(perron(h, 1e-12).lambda1 > perron(g, 1e-12).lambda1 + 1e-10);
        done++;
    }
}

TEST_CASE("bounds: avg degree <= lambda1 <= max degree, strict iff nonregular") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 50; t++) {
        Graph g = random_connected(rng, 5 + (int)(rng() % 10), 40);
        auto prof = degree_profile(g);
        double lam = perron(g, 1e-12).lambda1;
        CHECK(lam >= 2.0 * g.m() / g.n() - 1e-9);
        CHECK(lam <= prof.max_deg + 1e-12);
        if (!prof.is_regular) CHECK(lam < prof.max_deg - 1e-9);
    }
}
