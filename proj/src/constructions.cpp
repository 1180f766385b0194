#include "spex/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spex/errors.hpp"

namespace spex {

FamilySpec FamilySpec::from_order(int delta, int n) {
    if (delta < 3) throw input_error("family requires delta >= 3");
    FamilySpec s;
    s.delta = delta;
    s.n = n;
    s.alpha = n % (delta + 1);
    if (s.alpha == 0) s.alpha = delta + 1;
    s.k = (n - s.alpha) / (delta + 1);
    s.p = (delta % 2 == 1) ? delta - 1 : delta - 2;
    if (s.k < 2) throw input_error("order too small: spine needs k >= 2");
    return s;
}

FamilySpec FamilySpec::from_spine(int delta, int k, int alpha) {
    if (delta < 3) throw input_error("family requires delta >= 3");
    if (alpha < 1 || alpha > delta + 1) throw input_error("alpha out of range");
    FamilySpec s;
    s.delta = delta;
    s.k = k;
    s.alpha = alpha;
    s.n = k * (delta + 1) + alpha;
    s.p = (delta % 2 == 1) ? delta - 1 : delta - 2;
    if (k < 2) throw input_error("spine needs k >= 2");
    return s;
}

Graph extremal_delta3(int n) {
    if (n < 8) throw capability_error("extremal_delta3 requires n >= 8");
    const int r = n % 4;
    std::vector<std::pair<int, int>> e;
    int cut, next;
    if (r == 1 || r == 2) {
        // cap A: K4 minus {2,3} plus the cut 4 joined to both deficient vertices
        e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}};
        cut = 4;
        next = 5;
    } else {
        // cap B: the 7-vertex head (two stacked diamonds sharing a rim)
        e = {{0, 1}, {1, 2}, {2, 6}, {6, 5}, {5, 4}, {4, 3}, {3, 0}, {0, 4}, {1, 3}, {2, 5}};
        cut = 6;
        next = 7;
    }
    const bool pendant = (r == 0 || r == 2);
    const int units = (n - next - (pendant ? 1 : 0)) / 4;
    for (int t = 0; t < units; t++) {
        int b = next, c1 = next + 1, c2 = next + 2, a2 = next + 3;
        e.insert(e.end(), {{cut, b}, {b, c1}, {b, c2}, {c1, c2}, {c1, a2}, {c2, a2}});
        cut = a2;
        next += 4;
    }
    if (pendant) e.emplace_back(cut, next++);
    return Graph(n, e);
}

Graph extremal_delta4(int n) {
    if (n < 10) throw capability_error("extremal_delta4 requires n >= 10");
    const int r = n % 5;
    std::vector<std::pair<int, int>> e;
    int p1, p2, next;
    switch (r) {
        case 1:  // K5 minus {3,4}
            e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
            p1 = 3, p2 = 4, next = 5;
            break;
        case 2:  // 6-vertex head
            e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                 {1, 4}, {2, 3}, {2, 5}, {3, 5}, {4, 5}};
            p1 = 4, p2 = 5, next = 6;
            break;
        case 3:  // 7-vertex head
            e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                 {2, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
            p1 = 5, p2 = 6, next = 7;
            break;
        case 4:  // 8-vertex head
            e = {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                 {2, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
            p1 = 6, p2 = 7, next = 8;
            break;
        default:  // r == 0: K5 minus {3,4}, a 2-edge matching into a K4
            e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                 {3, 5}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}};
            p1 = 7, p2 = 8, next = 9;
            break;
    }
    const int units = (n - next - 1) / 5;
    for (int t = 0; t < units; t++) {
        int a = next, t1 = next + 1, b1 = next + 2, t2 = next + 3, b2 = next + 4;
        e.insert(e.end(), {{a, p1}, {a, p2}, {a, t1}, {a, b1}, {t1, b1},
                           {t1, t2}, {t1, b2}, {b1, t2}, {b1, b2}, {t2, b2}});
        p1 = t2;
        p2 = b2;
        next += 5;
    }
    e.emplace_back(next, p1);
    e.emplace_back(next, p2);
    return Graph(n, e);
}

Graph g_family(const FamilySpec& spec) {
    const int delta = spec.delta, k = spec.k, p = spec.p;
    if (k < 2) throw input_error("g_family needs k >= 2");
    if (p < 1 || p > delta - 1) throw input_error("g_family needs 1 <= p <= delta-1");
    std::vector<std::pair<int, int>> e;
    auto block = [&](int i) { return k + (i - 1) * delta; };  // blocks are 1-indexed
    for (int i = 1; i <= k - 1; i++) {
        int b = block(i);
        for (int a = 0; a < delta; a++)
            for (int c = a + 1; c < delta; c++) e.emplace_back(b + a, b + c);
    }
    for (int i = 1; i <= k; i++) {
        int u = i - 1;
        if (i <= k - 1)
            for (int j = 0; j < p; j++) e.emplace_back(u, block(i) + j);
        if (i >= 2)
            for (int j = p; j < delta; j++) e.emplace_back(u, block(i - 1) + j);
    }
    return Graph(k + (k - 1) * delta, e);
}

bool is_graphic(const std::vector<int>& seq) {
    std::vector<long long> d(seq.begin(), seq.end());
    std::sort(d.rbegin(), d.rend());
    const long long n = (long long)d.size();
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    if (!d.empty() && (d.front() > n - 1 || d.back() < 0)) return false;
    std::vector<long long> pre(n + 1, 0);
    for (long long i = 0; i < n; i++) pre[i + 1] = pre[i] + d[i];
    for (long long r = 1; r <= n; r++) {
        long long lhs = pre[r];
        long long rhs = r * (r - 1);
        for (long long i = r; i < n; i++) rhs += std::min(d[i], r);
        if (lhs > rhs) return false;
    }
    return true;
}

Graph realize_connected(const std::vector<int>& seq) {
    const int n = (int)seq.size();
    if (!std::is_sorted(seq.rbegin(), seq.rend()))
        throw input_error("degree sequence must be nonincreasing");
    if (!is_graphic(seq)) throw input_error("degree sequence is not graphic");
    if (n >= 2 && seq[n - 2] < 2)
        throw capability_error("connected realization needs d_{n-1} >= 2");
    if (n >= 1 && seq[n - 1] < 1)
        throw capability_error("connected realization needs d_n >= 1");

    // canonical Havel-Hakimi: biggest residual degree first, ties by index
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> rem(n);  // (residual degree, vertex)
    for (int v = 0; v < n; v++) rem[v] = {seq[v], v};
    while (true) {
        std::sort(rem.begin(), rem.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (rem[0].first == 0) break;
        int d = rem[0].first, v = rem[0].second;
        rem[0].first = 0;
        if (d >= n) throw input_error("degree sequence is not graphic");
        for (int j = 1; j <= d; j++) {
            if (rem[j].first <= 0) throw input_error("degree sequence is not graphic");
            rem[j].first--;
            edges.emplace_back(v, rem[j].second);
        }
    }

    Graph g(n, edges);
    // join components with a degree-preserving switch across a non-bridge edge
    while (!is_connected(g)) {
        auto comp_of = [&](const Graph& gg) {
            std::vector<int> comp(n, -1);
            int c = 0;
            for (int s = 0; s < n; s++) {
                if (comp[s] >= 0) continue;
                std::vector<int> stack = {s};
                comp[s] = c;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : gg.neighbors(u))
                        if (comp[w] < 0) {
                            comp[w] = c;
                            stack.push_back(w);
                        }
                }
                c++;
            }
            return comp;
        };
        auto comp = comp_of(g);
        auto all_edges = g.edges();
        // a non-bridge edge in component 0
        auto non_bridge = [&](std::pair<int, int> cut) {
            std::vector<std::pair<int, int>> rest;
            for (auto e2 : all_edges)
                if (e2 != cut) rest.push_back(e2);
            Graph h(n, rest);
            auto d = bfs_distances(h, cut.first);
            return d[cut.second] >= 0;
        };
        std::pair<int, int> e1{-1, -1}, e2{-1, -1};
        for (auto e : all_edges)
            if (comp[e.first] == 0 && non_bridge(e)) {
                e1 = e;
                break;
            }
        for (auto e : all_edges)
            if (comp[e.first] != 0) {
                e2 = e;
                break;
            }
        if (e1.first < 0 || e2.first < 0)
            throw input_error("component-joining switch unavailable");
        std::vector<std::pair<int, int>> next;
        for (auto e : all_edges)
            if (e != e1 && e != e2) next.push_back(e);
        next.emplace_back(e1.first, e2.first);
        next.emplace_back(e1.second, e2.second);
        g = Graph(n, next);
    }
    return g;
}

Graph h_family(int delta, int n) {
    FamilySpec spec = FamilySpec::from_order(delta, n);
    const int k = spec.k, alpha = spec.alpha;
    bool pendant = false;
    int fsize, deficiency;
    if (delta % 2 == 1) {
        if (n % 2 == 1) {
            fsize = delta + alpha + 1;
            deficiency = 1;
        } else {
            fsize = delta + alpha;
            deficiency = 1;
            pendant = true;
        }
    } else {
        fsize = delta + alpha + 1;
        deficiency = 2;
    }
    std::vector<int> fdeg(fsize, delta);
    fdeg[fsize - 1] = delta - deficiency;
    Graph F = realize_connected(fdeg);
    Graph spine = g_family(spec);
    // merge F's deficient vertex (its last index) with u_k = k-1
    Graph joined = coalesce(spine, k - 1, F, fsize - 1);
    if (!pendant) return joined;
    auto edges = joined.edges();
    edges.emplace_back(0, joined.n());  // pendant at u_1
    return Graph(joined.n() + 1, edges);
}

TestVector test_vector(const FamilySpec& spec) {
    const int k = spec.k, delta = spec.delta, p = spec.p;
    TestVector tv;
    tv.z.resize(k);
    const double pi = std::acos(-1.0);
    for (int j = 1; j <= k; j++) tv.z[j - 1] = std::sin((2.0 * j - 1.0) * pi / (4.0 * k));
    tv.a.resize(k - 1);
    tv.b.resize(k - 1);
    for (int j = 1; j <= k - 1; j++) {
        tv.a[j - 1] = ((p + 1) * tv.z[j - 1] + (delta - p) * tv.z[j]) / (delta + 1);
        tv.b[j - 1] = (p * tv.z[j - 1] + (delta + 1 - p) * tv.z[j]) / (delta + 1);
    }
    tv.f_value = tv.z[k - 1];
    return tv;
}

double gap_upper_closed_form(const FamilySpec& spec) {
    const double k = spec.k, delta = spec.delta, p = spec.p;
    if (spec.k < 2) throw input_error("closed form needs k >= 2");
    const double pi = std::acos(-1.0);
    const double z1 = std::sin(pi / (4.0 * k));
    const double sum_diff = 2.0 * (k - 1.0) * z1 * z1;
    const double sum_z2 = (k + 1.0) / 2.0;
    const double sum_zz = (k - 1.0) / 2.0 * std::cos(pi / (2.0 * k));
    const double C = delta * delta * delta - (2.0 * p - 3.0) * delta * delta +
                     (2.0 * p * p - 4.0 * p + 3.0) * delta + 4.0 * p * p + 1.0;
    const double num = (delta - p) * (delta + 1.0) * (delta + 1.0) * z1 * z1 +
                       p * (delta - p) * (delta + 1.0) * sum_diff;
    const double den = C * sum_z2 + 2.0 * p * (delta - p) * (delta + 2.0) * sum_zz;
    return num / den;
}

}  // namespace spex
