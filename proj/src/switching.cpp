#include "spex/switching.hpp"

#include <algorithm>

#include "spex/errors.hpp"

namespace spex {

bool rotation_valid(const Graph& g, const RotationMove& m) {
    const int n = g.n();
    if (m.u < 0 || m.u >= n || m.v < 0 || m.v >= n || m.w < 0 || m.w >= n) return false;
    if (m.v == m.w || m.u == m.v || m.u == m.w) return false;
    return g.has_edge(m.u, m.v) && !g.has_edge(m.u, m.w);
}

bool switch_valid(const Graph& g, const SwitchMove& m) {
    const int n = g.n();
    int vs[4] = {m.s, m.t, m.v, m.u};
    for (int a : vs)
        if (a < 0 || a >= n) return false;
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (vs[i] == vs[j]) return false;
    return g.has_edge(m.u, m.v) && g.has_edge(m.s, m.t) && !g.has_edge(m.s, m.v) &&
           !g.has_edge(m.t, m.u);
}

Graph rotate(const Graph& g, const RotationMove& m) {
    if (!rotation_valid(g, m)) throw input_error("invalid rotation move");
    auto edges = g.edges();
    std::erase_if(edges, [&](auto e) {
        return (e.first == std::min(m.u, m.v) && e.second == std::max(m.u, m.v));
    });
    edges.emplace_back(m.u, m.w);
    return Graph(g.n(), edges);
}

Graph local_switch(const Graph& g, const SwitchMove& m) {
    if (!switch_valid(g, m)) throw input_error("invalid local switching move");
    auto edges = g.edges();
    auto kill = [&](int a, int b) {
        std::erase_if(edges, [&](auto e) {
            return e.first == std::min(a, b) && e.second == std::max(a, b);
        });
    };
    kill(m.u, m.v);
    kill(m.s, m.t);
    edges.emplace_back(m.s, m.v);
    edges.emplace_back(m.t, m.u);
    return Graph(g.n(), edges);
}

bool is_proper_switch(const PerronData& pd, const SwitchMove& m, double tie_tol) {
    double p = (pd.x[m.s] - pd.x[m.u]) * (pd.x[m.v] - pd.x[m.t]);
    return p >= -tie_tol;
}

namespace {

bool in_class(const Graph& g, int delta) {
    auto p = degree_profile(g);
    return p.max_deg == delta && !p.is_regular && is_connected(g);
}

}  // namespace

Graph improving_search(const Graph& g, int delta, long long budget, double tol,
                       double improve_eps) {
    if (!in_class(g, delta))
        throw input_error("improving_search input must be connected, nonregular, max degree delta");
    Graph cur = g;
    double lam = perron(cur, tol).lambda1;
    for (long long step = 0; step < budget; step++) {
        bool applied = false;
        const int n = cur.n();
        // rotations first, lexicographic (u, v, w)
        for (int u = 0; u < n && !applied; u++)
            for (int v = 0; v < n && !applied; v++)
                for (int w = 0; w < n && !applied; w++) {
                    RotationMove m{u, v, w};
                    if (!rotation_valid(cur, m)) continue;
                    Graph cand = rotate(cur, m);
                    if (!in_class(cand, delta)) continue;
                    double lam2 = perron(cand, tol).lambda1;
                    if (lam2 > lam + improve_eps) {
                        cur = std::move(cand);
                        lam = lam2;
                        applied = true;
                    }
                }
        // then switches, lexicographic (s, t, v, u)
        for (int s = 0; s < n && !applied; s++)
            for (int t = 0; t < n && !applied; t++)
                for (int v = 0; v < n && !applied; v++)
                    for (int u = 0; u < n && !applied; u++) {
                        SwitchMove m{s, t, v, u};
                        if (!switch_valid(cur, m)) continue;
                        Graph cand = local_switch(cur, m);
                        if (!in_class(cand, delta)) continue;
                        double lam2 = perron(cand, tol).lambda1;
                        if (lam2 > lam + improve_eps) {
                            cur = std::move(cand);
                            lam = lam2;
                            applied = true;
                        }
                    }
        if (!applied) break;  // local optimum
    }
    return cur;
}

}  // namespace spex
