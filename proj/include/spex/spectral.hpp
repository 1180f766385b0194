#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

struct PerronData {
    double lambda1 = 0.0;
    std::vector<double> x;   // entrywise positive, unit 2-norm
    double residual = 0.0;   // inf-norm of A*x - lambda1*x
    long long iterations = 0;
};

// Power iteration on A + I with the all-ones start vector (the +I shift kills
// the period-2 oscillation on bipartite graphs). Deterministic. Throws
// graph_domain_error on disconnected input and convergence_error (carrying the
// best estimate) when max_iters runs out before residual <= tol.
PerronData perron(const Graph& g, double tol = 1e-12, long long max_iters = 10'000'000);

// Coarsest equitable partition via color refinement; returns cell ids 0..k-1
// numbered by first occurrence.
std::vector<int> equitable_partition(const Graph& g);

// Perron data via the equitable-quotient shortcut when the quotient is small
// (shift-invert iteration on the cell quotient, lifted and then verified by a
// residual check on g itself); falls back to perron() otherwise. Same
// contract as perron().
PerronData perron_auto(const Graph& g, double tol = 1e-12, long long max_iters = 10'000'000);

struct GapBoundInput {
    std::vector<double> y;
    int delta = 0;
};

// Residuals of the two eigen-identities tying the gap to the Perron vector:
//   r_energy = |(D-l1)||x||^2 - sum (D-d(v)) x_v^2 - sum_{uv in E} (x_u-x_v)^2|
//   r_sum    = |sum (D-d(v)) x_v - (D-l1) sum x_v|
std::pair<double, double> gap_identities_residual(const Graph& g, const PerronData& pd,
                                                  int delta);

// (sum_v (delta-d(v)) y_v^2 + y^T L y) / ||y||^2  -- an upper bound on
// delta - lambda1(g) for any nonzero y. Throws input_error on the zero vector.
double rayleigh_upper_gap(const Graph& g, const GapBoundInput& input);

}  // namespace spex
