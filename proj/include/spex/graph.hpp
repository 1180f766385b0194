#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spex {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency is kept as sorted neighbor lists plus 64-bit row masks when n <= 64.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    bool has_bitrows() const { return !bits_.empty(); }
    uint64_t bitrow(int v) const { return bits_[v]; }

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;  // row masks, only when n_ <= 64
};

struct DegreeProfile {
    std::vector<int> sorted_degrees;  // nonincreasing
    int max_deg = 0;
    int min_deg = 0;
    bool is_regular = true;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

bool is_connected(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

// Max over vertex pairs of BFS distance. Throws graph_domain_error when disconnected.
// threads > 1 runs the sources in parallel; results are identical either way.
int diameter(const Graph& g, int threads = 1);
int diameter_serial(const Graph& g);

// Eccentricities of every vertex (used by diameter kernels and tests).
std::vector<int> bfs_distances(const Graph& g, int source);

// Glue g1 and g2 by identifying v1 with v2. Vertices of g1 keep their indices,
// vertices of g2 follow (minus the merged one, which maps onto v1).
Graph coalesce(const Graph& g1, int v1, const Graph& g2, int v2);

}  // namespace spex
