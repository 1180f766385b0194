#include "spex/embedding.hpp"

#include <algorithm>

#include "spex/errors.hpp"

namespace spex {

namespace {

struct Search {
    const Graph* host;
    const Graph* pat;
    const std::vector<int>* extra;  // nullptr: no degree constraint
    size_t limit = 1;
    std::vector<Embedding> found;
    std::vector<int> img;
    std::vector<char> used;

    bool feasible(int pv, int hv) const {
        int want = pat->degree(pv);
        int have = host->degree(hv);
        if (extra) {
            if (have != want + (*extra)[pv]) return false;
        } else if (have < want) {
            return false;
        }
        for (int j = 0; j < pv; j++)
            if (pat->has_edge(pv, j) != host->has_edge(hv, img[j])) return false;
        return true;
    }

    bool rec(int pv) {
        if (pv == pat->n()) {
            Embedding e;
            e.map = img;
            for (int i = 0; i < pat->n(); i++) {
                int leaving = host->degree(img[i]) - pat->degree(i);
                if (leaving > 0) e.boundary.push_back(i);
            }
            found.push_back(std::move(e));
            return found.size() >= limit;
        }
        for (int hv = 0; hv < host->n(); hv++) {
            if (used[hv] || !feasible(pv, hv)) continue;
            img[pv] = hv;
            used[hv] = 1;
            bool done = rec(pv + 1);
            used[hv] = 0;
            if (done) return true;
        }
        return false;
    }
};

std::vector<Embedding> run_search(const Graph& g, const Graph& pattern,
                                  const std::vector<int>* extra, size_t limit) {
    if (pattern.n() > 10) throw capability_error("pattern search limited to 10 vertices");
    Search s;
    s.host = &g;
    s.pat = &pattern;
    s.extra = extra;
    s.limit = limit;
    s.img.assign(pattern.n(), -1);
    s.used.assign(g.n(), 0);
    if (pattern.n() <= g.n()) s.rec(0);
    return std::move(s.found);
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& g, const Graph& pattern,
                                                const std::vector<int>& declared_boundary) {
    (void)declared_boundary;  // annotation hint only; see header
    auto res = run_search(g, pattern, nullptr, 1);
    if (res.empty()) return std::nullopt;
    return res.front();
}

std::optional<Embedding> find_induced_embedding_exact_degrees(
    const Graph& g, const Graph& pattern, const std::vector<int>& extra_degree) {
    if ((int)extra_degree.size() != pattern.n())
        throw input_error("extra_degree size must match pattern order");
    auto res = run_search(g, pattern, &extra_degree, 1);
    if (res.empty()) return std::nullopt;
    return res.front();
}

std::vector<Embedding> all_induced_embeddings_exact_degrees(
    const Graph& g, const Graph& pattern, const std::vector<int>& extra_degree, size_t limit) {
    if ((int)extra_degree.size() != pattern.n())
        throw input_error("extra_degree size must match pattern order");
    return run_search(g, pattern, &extra_degree, limit);
}

}  // namespace spex
