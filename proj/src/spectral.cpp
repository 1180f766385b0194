#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spex/errors.hpp"

namespace spex {

namespace {

void matvec(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    const int n = g.n();
    for (int v = 0; v < n; v++) {
        double s = 0.0;
        for (int u : g.neighbors(v)) s += x[u];
        y[v] = s;
    }
}

double finalize(const Graph& g, std::vector<double>& x, double* residual) {
    double nrm = 0.0;
    for (double t : x) nrm += t * t;
    nrm = std::sqrt(nrm);
    for (double& t : x) t /= nrm;
    std::vector<double> y(g.n());
    matvec(g, x, y);
    double lam = 0.0;
    for (int v = 0; v < g.n(); v++) lam += x[v] * y[v];
    double res = 0.0;
    for (int v = 0; v < g.n(); v++) res = std::max(res, std::fabs(y[v] - lam * x[v]));
    *residual = res;
    return lam;
}

uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Dense lower-triangular Cholesky of (sigma*I - Bs); returns false on a
// nonpositive pivot.
bool cholesky(std::vector<double>& a, int n) {
    for (int j = 0; j < n; j++) {
        double d = a[(size_t)j * n + j];
        for (int k = 0; k < j; k++) d -= a[(size_t)j * n + k] * a[(size_t)j * n + k];
        if (d <= 0.0) return false;
        d = std::sqrt(d);
        a[(size_t)j * n + j] = d;
        for (int i = j + 1; i < n; i++) {
            double s = a[(size_t)i * n + j];
            for (int k = 0; k < j; k++) s -= a[(size_t)i * n + k] * a[(size_t)j * n + k];
            a[(size_t)i * n + j] = s / d;
        }
    }
    return true;
}

void chol_solve(const std::vector<double>& L, int n, std::vector<double>& b) {
    for (int i = 0; i < n; i++) {
        double s = b[i];
        for (int k = 0; k < i; k++) s -= L[(size_t)i * n + k] * b[k];
        b[i] = s / L[(size_t)i * n + i];
    }
    for (int i = n - 1; i >= 0; i--) {
        double s = b[i];
        for (int k = i + 1; k < n; k++) s -= L[(size_t)k * n + i] * b[k];
        b[i] = s / L[(size_t)i * n + i];
    }
}

constexpr int kQuotientCap = 3200;

}  // namespace

PerronData perron(const Graph& g, double tol, long long max_iters) {
    if (g.n() < 1) throw input_error("perron needs at least one vertex");
    if (tol <= 0) throw input_error("perron tolerance must be positive");
    if (!is_connected(g)) throw graph_domain_error("perron of a disconnected graph");

    const int n = g.n();
    PerronData pd;
    pd.x.assign(n, 1.0 / std::sqrt((double)n));
    if (n == 1) return pd;

    std::vector<double> x(n, 1.0), y(n);
    long long it = 0;
    double rho = 0.0;
    while (it < max_iters) {
        // y = (A + I) x
        matvec(g, x, y);
        for (int v = 0; v < n; v++) y[v] += x[v];
        double dot = 0.0, nrm2 = 0.0;
        for (int v = 0; v < n; v++) {
            dot += x[v] * y[v];
            nrm2 += x[v] * x[v];
        }
        rho = dot / nrm2;
        double res = 0.0, mx = 0.0;
        for (int v = 0; v < n; v++) {
            res = std::max(res, std::fabs(y[v] - rho * x[v]));
            mx = std::max(mx, std::fabs(y[v]));
        }
        res /= std::sqrt(nrm2);  // scale-free: residual of the normalized vector
        double inv = 1.0 / mx;
        for (int v = 0; v < n; v++) x[v] = y[v] * inv;
        it++;
        if (res <= tol * 0.5) break;  // headroom for the final re-normalization
    }
    pd.iterations = it;
    pd.x = x;
    pd.lambda1 = finalize(g, pd.x, &pd.residual);
    if (pd.residual > tol && it >= max_iters)
        throw convergence_error("power iteration did not reach tolerance", pd.lambda1,
                                pd.residual);
    return pd;
}

std::vector<int> equitable_partition(const Graph& g) {
    const int n = g.n();
    std::vector<int> col(n), next(n);
    for (int v = 0; v < n; v++) col[v] = g.degree(v);
    // dense relabel of initial colors
    {
        std::vector<int> remap(n + 1, -1);
        int c = 0;
        for (int v = 0; v < n; v++) {
            if (remap[col[v]] < 0) remap[col[v]] = c++;
            col[v] = remap[col[v]];
        }
    }
    std::vector<uint64_t> sig(n);
    std::vector<std::pair<uint64_t, int>> order(n);
    for (int round = 0; round < n; round++) {
        for (int v = 0; v < n; v++) {
            uint64_t s = splitmix64(0x1234567ULL + (uint64_t)col[v]);
            for (int u : g.neighbors(v)) s += splitmix64((uint64_t)col[u] * 0x9e3779b1ULL + 1);
            sig[v] = s;
        }
        for (int v = 0; v < n; v++) order[v] = {sig[v], v};
        std::sort(order.begin(), order.end());
        // new ids in first-occurrence order over vertex index
        int c = 0;
        std::vector<int> tmp(n, -1);
        for (int i = 0; i < n; i++) {
            if (i > 0 && order[i].first != order[i - 1].first) c++;
            tmp[order[i].second] = c;
        }
        std::vector<int> first(c + 1, n);
        for (int v = 0; v < n; v++) first[tmp[v]] = std::min(first[tmp[v]], v);
        std::vector<int> byfirst(c + 1);
        std::iota(byfirst.begin(), byfirst.end(), 0);
        std::sort(byfirst.begin(), byfirst.end(), [&](int a, int b) { return first[a] < first[b]; });
        std::vector<int> rank(c + 1);
        for (int i = 0; i <= c; i++) rank[byfirst[i]] = i;
        for (int v = 0; v < n; v++) next[v] = rank[tmp[v]];
        if (next == col) break;
        col.swap(next);
    }
    return col;
}

namespace {

// Shift-invert iteration on the symmetric cell quotient; returns false when the
// lifted vector fails the residual check and the caller should fall back.
bool quotient_perron(const Graph& g, double tol, PerronData* out) {
    const int n = g.n();
    auto cell = equitable_partition(g);
    int k = *std::max_element(cell.begin(), cell.end()) + 1;
    if (k > kQuotientCap || k < 1) return false;
    std::vector<double> size(k, 0.0);
    for (int v = 0; v < n; v++) size[cell[v]] += 1.0;
    std::vector<double> B((size_t)k * k, 0.0);
    for (int v = 0; v < n; v++)
        for (int u : g.neighbors(v)) B[(size_t)cell[v] * k + cell[u]] += 1.0;
    for (int c = 0; c < k; c++)
        for (int d = 0; d < k; d++)
            B[(size_t)c * k + d] /= std::sqrt(size[c] * size[d]);

    int delta = 0;
    for (int v = 0; v < n; v++) delta = std::max(delta, g.degree(v));
    double sigma = (double)delta;
    std::vector<double> M;
    for (int attempt = 0; attempt < 4; attempt++) {
        M = B;
        for (double& t : M) t = -t;
        for (int c = 0; c < k; c++) M[(size_t)c * k + c] += sigma;
        if (cholesky(M, k)) break;
        sigma += std::max(1e-9, 1e-9 * delta);
        M.clear();
    }
    if (M.empty()) return false;

    std::vector<double> y(k, 1.0), By(k);
    double lam_prev = -1e300;
    for (int it = 0; it < 400; it++) {
        chol_solve(M, k, y);
        double nrm = 0.0;
        for (double t : y) nrm += t * t;
        nrm = std::sqrt(nrm);
        for (double& t : y) t /= nrm;
        double lam = 0.0;
        for (int c = 0; c < k; c++) {
            double s = 0.0;
            for (int d = 0; d < k; d++) s += B[(size_t)c * k + d] * y[d];
            By[c] = s;
            lam += y[c] * s;
        }
        if (std::fabs(lam - lam_prev) < 1e-15 * (1.0 + std::fabs(lam)) && it > 2) break;
        lam_prev = lam;
    }
    PerronData pd;
    pd.x.resize(n);
    for (int v = 0; v < n; v++) pd.x[v] = std::fabs(y[cell[v]]) / std::sqrt(size[cell[v]]);
    pd.lambda1 = finalize(g, pd.x, &pd.residual);
    pd.iterations = 0;
    for (double t : pd.x)
        if (!(t > 0.0)) return false;
    if (pd.residual > tol) return false;
    *out = pd;
    return true;
}

}  // namespace

PerronData perron_auto(const Graph& g, double tol, long long max_iters) {
    if (g.n() < 1) throw input_error("perron needs at least one vertex");
    if (!is_connected(g)) throw graph_domain_error("perron of a disconnected graph");
    if (g.n() == 1) return perron(g, tol, max_iters);
    auto prof = degree_profile(g);
    if (prof.is_regular) {
        PerronData pd;
        pd.lambda1 = prof.max_deg;
        pd.x.assign(g.n(), 1.0 / std::sqrt((double)g.n()));
        pd.residual = 0.0;
        return pd;
    }
    PerronData pd;
    if (quotient_perron(g, tol, &pd)) return pd;
    return perron(g, tol, max_iters);
}

std::pair<double, double> gap_identities_residual(const Graph& g, const PerronData& pd,
                                                  int delta) {
    const int n = g.n();
    double nrm2 = 0.0, defsq = 0.0, energy = 0.0, defsum = 0.0, xsum = 0.0;
    for (int v = 0; v < n; v++) {
        nrm2 += pd.x[v] * pd.x[v];
        defsq += (delta - g.degree(v)) * pd.x[v] * pd.x[v];
        defsum += (delta - g.degree(v)) * pd.x[v];
        xsum += pd.x[v];
    }
    for (auto [u, v] : g.edges()) {
        double d = pd.x[u] - pd.x[v];
        energy += d * d;
    }
    double gap = delta - pd.lambda1;
    double r_energy = std::fabs(gap * nrm2 - defsq - energy);
    double r_sum = std::fabs(defsum - gap * xsum);
    return {r_energy, r_sum};
}

double rayleigh_upper_gap(const Graph& g, const GapBoundInput& input) {
    if ((int)input.y.size() != g.n()) throw input_error("test vector has wrong length");
    double nrm2 = 0.0;
    for (double t : input.y) nrm2 += t * t;
    if (nrm2 == 0.0) throw input_error("test vector must be nonzero");
    double defsq = 0.0;
    for (int v = 0; v < g.n(); v++)
        defsq += (input.delta - g.degree(v)) * input.y[v] * input.y[v];
    double energy = 0.0;
    for (auto [u, v] : g.edges()) {
        double d = input.y[u] - input.y[v];
        energy += d * d;
    }
    return (defsq + energy) / nrm2;
}

}  // namespace spex
