#include "spex/analysis.hpp"

#include <cmath>

#include "spex/errors.hpp"
#include "spex/spectral.hpp"

namespace spex {

namespace {

const double PI = std::acos(-1.0);

GapRow one_row(int delta, int n, double tol) {
    Graph g;
    if (delta == 3)
        g = extremal_delta3(n);
    else if (delta == 4)
        g = extremal_delta4(n);
    else
        g = h_family(delta, n);
    auto pd = perron_auto(g, tol);
    GapRow row;
    row.n = n;
    row.k = FamilySpec::from_order(delta, n).k;
    row.delta_min = degree_profile(g).min_deg;
    row.lambda1 = pd.lambda1;
    row.gap = delta - pd.lambda1;
    row.scaled_gap = double(n) * n * row.gap;
    row.normalized = row.scaled_gap / (delta % 2 == 1 ? delta - 1 : delta - 2);
    return row;
}

}  // namespace

std::vector<GapRow> gap_table(int delta, const std::vector<int>& ns, double tol, int threads) {
    std::vector<GapRow> rows(ns.size());
#ifdef SPEX_HAVE_OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (size_t i = 0; i < ns.size(); i++) rows[i] = one_row(delta, ns[i], tol);
        return rows;
    }
#endif
    (void)threads;
    for (size_t i = 0; i < ns.size(); i++) rows[i] = one_row(delta, ns[i], tol);
    return rows;
}

LimitVerdict limit_report(int delta, const std::vector<int>& ns, double rel_band, double tol,
                          int threads) {
    if (ns.size() < 4) throw input_error("limit check needs at least 4 orders");
    for (size_t i = 1; i < ns.size(); i++)
        if (ns[i] <= ns[i - 1]) throw input_error("orders must increase");
    LimitVerdict v;
    v.target = (delta % 2 == 1) ? PI * PI / 4.0 : PI * PI / 2.0;
    v.rows = gap_table(delta, ns, tol, threads);
    for (auto& r : v.rows) v.rel_err.push_back(std::fabs(r.normalized - v.target) / v.target);
    v.last_within_band = v.rel_err.back() <= rel_band;
    v.errors_decreasing = true;
    for (size_t i = 1; i < v.rel_err.size(); i++)
        if (v.rel_err[i] >= v.rel_err[i - 1]) v.errors_decreasing = false;
    v.verdict = v.last_within_band && v.errors_decreasing;
    return v;
}

double path_lower_bound(const FamilySpec& spec) {
    const double p = spec.p, d = spec.delta, k = spec.k;
    return p * (d - p) * PI * PI / ((d + 1) * (d + 1) * (2 * k + 1) * (2 * k + 1));
}

CounterexampleReport cioaba_check(int delta, int k, double tol, int threads) {
    if (delta % 2 == 0 || delta < 3) throw input_error("cioaba_check needs odd delta >= 3");
    CounterexampleReport rep;
    rep.delta = delta;
    rep.k = k;
    rep.n = k * (delta + 1) + 2;  // alpha = 2: even order, pendant member
    Graph g = h_family(delta, rep.n);
    rep.delta_min = degree_profile(g).min_deg;
    auto pd = perron_auto(g, tol);
    rep.lambda1 = pd.lambda1;
    rep.gap = delta - pd.lambda1;
    rep.diam = diameter(g, threads);
    rep.rhs = std::sqrt(double(delta - rep.delta_min)) / (double(rep.n) * rep.diam);
    rep.violated = rep.gap < rep.rhs;
    rep.diam_bound_ok = rep.diam <= 3 * k + 2 * delta - 2;
    return rep;
}

}  // namespace spex
