#pragma once
#include <string>
#include <vector>

#include "spex/constructions.hpp"
#include "spex/graph.hpp"

namespace spex {

struct GapRow {
    int n = 0;
    int k = 0;
    int delta_min = 0;       // minimum degree of the graph behind the row
    double lambda1 = 0.0;
    double gap = 0.0;        // delta - lambda1
    double scaled_gap = 0.0; // n^2 * gap
    double normalized = 0.0; // scaled / (delta-1) for odd delta, / (delta-2) for even
};

// Rows over the requested orders; delta in {3,4} uses the extremal families,
// anything else the coalescence family. threads > 1 evaluates rows in parallel
// with order-preserving assembly.
std::vector<GapRow> gap_table(int delta, const std::vector<int>& ns, double tol = 1e-13,
                              int threads = 1);

struct LimitVerdict {
    double target = 0.0;           // the constant the normalized gap is tested against
    std::vector<GapRow> rows;
    std::vector<double> rel_err;   // |normalized - target| / target per row
    bool last_within_band = false;
    bool errors_decreasing = false;
    bool verdict = false;
};

// Trend check along an increasing ladder of orders: the last normalized gap
// must sit within rel_band of the parity target (pi^2/4 odd, pi^2/2 even) and
// the errors must decrease monotonically.
LimitVerdict limit_report(int delta, const std::vector<int>& ns, double rel_band = 0.05,
                          double tol = 1e-13, int threads = 1);

// p(delta-p) pi^2 / ((delta+1)^2 (2k+1)^2) -- the path-comparison lower bound
// on the gap of the coalescence family.
double path_lower_bound(const FamilySpec& spec);

struct CounterexampleReport {
    int delta = 0;
    int delta_min = 0;
    int n = 0;
    int k = 0;
    int diam = 0;
    double lambda1 = 0.0;
    double gap = 0.0;
    double rhs = 0.0;  // sqrt(delta - delta_min) / (n * diam)
    bool violated = false;          // gap < rhs
    bool diam_bound_ok = false;     // diam <= 3k + 2*delta - 2
};

// Tests gap < sqrt(delta-min_deg)/(n*D) on the even-order pendant member of the
// coalescence family (odd delta, alpha = 2, so min degree 1).
CounterexampleReport cioaba_check(int delta, int k, double tol = 1e-13, int threads = 1);

}  // namespace spex
