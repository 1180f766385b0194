#include "spex/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "spex/errors.hpp"

#ifdef SPEX_HAVE_OPENMP
#include <omp.h>
#endif

namespace spex {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), m_(0) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loop rejected");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;  // duplicates collapse
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        m_++;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (n <= 64) {
        bits_.assign(n, 0);
        for (int v = 0; v < n; v++)
            for (int u : adj_[v]) bits_[v] |= uint64_t(1) << u;
    }
}

bool Graph::has_edge(int u, int v) const {
    if (!bits_.empty()) return (bits_[u] >> v) & 1;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int v = 0; v < n_; v++)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return true;
    if (g.has_bitrows() && n <= 64) {
        uint64_t seen = 1, frontier = 1;
        const uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
        while (frontier) {
            uint64_t next = 0;
            for (int v = 0; v < n; v++)
                if ((frontier >> v) & 1) next |= g.bitrow(v);
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == all;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                count++;
                stack.push_back(v);
            }
    }
    return count == n;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.sorted_degrees.resize(g.n());
    for (int v = 0; v < g.n(); v++) p.sorted_degrees[v] = g.degree(v);
    std::sort(p.sorted_degrees.rbegin(), p.sorted_degrees.rend());
    if (g.n() > 0) {
        p.max_deg = p.sorted_degrees.front();
        p.min_deg = p.sorted_degrees.back();
    }
    p.is_regular = (p.max_deg == p.min_deg);
    return p;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), -1);
    std::vector<int> queue;
    queue.reserve(g.n());
    queue.push_back(source);
    dist[source] = 0;
    for (size_t head = 0; head < queue.size(); head++) {
        int u = queue[head];
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

static int eccentricity_checked(const Graph& g, int source) {
    auto d = bfs_distances(g, source);
    int ecc = 0;
    for (int v = 0; v < g.n(); v++) {
        if (d[v] < 0) throw graph_domain_error("diameter of a disconnected graph");
        ecc = std::max(ecc, d[v]);
    }
    return ecc;
}

int diameter_serial(const Graph& g) {
    if (g.n() == 0) throw graph_domain_error("diameter of the empty graph");
    int diam = 0;
    for (int s = 0; s < g.n(); s++) diam = std::max(diam, eccentricity_checked(g, s));
    return diam;
}

int diameter(const Graph& g, int threads) {
    if (g.n() == 0) throw graph_domain_error("diameter of the empty graph");
    if (!is_connected(g)) throw graph_domain_error("diameter of a disconnected graph");
#ifdef SPEX_HAVE_OPENMP
    if (threads > 1) {
        int diam = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : diam) num_threads(threads)
        for (int s = 0; s < g.n(); s++) {
            auto d = bfs_distances(g, s);
            int ecc = 0;
            for (int v : d) ecc = std::max(ecc, v);
            diam = std::max(diam, ecc);
        }
        return diam;
    }
#endif
    (void)threads;
    return diameter_serial(g);
}

Graph coalesce(const Graph& g1, int v1, const Graph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.n() || v2 < 0 || v2 >= g2.n())
        throw input_error("coalesce: vertex out of range");
    const int n = g1.n() + g2.n() - 1;
    auto remap = [&](int v) {
        if (v == v2) return v1;
        return v < v2 ? g1.n() + v : g1.n() + v - 1;
    };
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(remap(u), remap(v));
    return Graph(n, edges);
}

}  // namespace spex
