#include "spex/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "spex/errors.hpp"
#include "spex/graph_io.hpp"

namespace spex {

namespace {

// Minimizes the upper-triangle bit string (column by column, the graph6 bit
// order) over all placements. State: perm[0..depth) chosen; cols holds the
// already-emitted column bits for the best candidate comparison.
struct Minimizer {
    int n;
    const Graph* g;
    std::vector<int> perm;
    std::vector<uint32_t> cols;       // cols[j] = bits x(0,j)..x(j-1,j) of current prefix
    std::vector<uint32_t> best_cols;  // same for the best complete ordering found
    std::vector<int> best_perm;
    bool have_best = false;

    void run() {
        perm.assign(n, -1);
        cols.assign(n, 0);
        std::vector<char> used(n, 0);
        descend(0, used, true);
    }

    // tight == true while the current prefix is known to equal the best prefix;
    // it only gates the column pruning. The leaf does an exact comparison, so
    // a stale flag after an incumbent swap costs time, not correctness.
    void descend(int depth, std::vector<char>& used, bool tight) {
        if (depth == n) {
            if (!have_best || cols < best_cols) {
                best_cols = cols;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        // candidate vertices; collapse twins (identical closed/open neighborhoods
        // among unused vertices), since swapping twins is an automorphism
        std::vector<int> cand;
        for (int v = 0; v < n; v++) {
            if (used[v]) continue;
            bool twin = false;
            for (int w : cand) {
                if (g->has_edge(v, w)) {
                    uint64_t rv = g->bitrow(v) & ~(uint64_t(1) << w);
                    uint64_t rw = g->bitrow(w) & ~(uint64_t(1) << v);
                    twin = (rv == rw);
                } else {
                    twin = (g->bitrow(v) == g->bitrow(w));
                }
                if (twin) break;
            }
            if (!twin) cand.push_back(v);
        }
        for (int v : cand) {
            uint32_t col = 0;
            for (int i = 0; i < depth; i++)
                col = (col << 1) | (g->has_edge(perm[i], v) ? 1 : 0);
            bool next_tight = tight;
            if (have_best && tight) {
                if (col > best_cols[depth]) continue;  // prefix already worse
                next_tight = (col == best_cols[depth]);
            }
            perm[depth] = v;
            cols[depth] = col;
            used[v] = 1;
            descend(depth + 1, used, next_tight);
            used[v] = 0;
        }
        perm[depth] = -1;
    }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
    if (g.n() > 12) throw capability_error("canonical_form limited to n <= 12");
    if (g.n() <= 1) return to_graph6(g);
    Minimizer mz;
    mz.n = g.n();
    mz.g = &g;
    mz.run();
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); i++) pos[mz.best_perm[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
    return to_graph6(Graph(g.n(), edges));
}

Graph graph_from_canonical(const CanonicalCode& code) { return from_graph6(code); }

}  // namespace spex
