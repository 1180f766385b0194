#pragma once
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Parameters selecting a near-regular coalescence family member:
//   n = k*(delta+1) + alpha with 1 <= alpha <= delta+1 (alpha = delta+1 when
//   delta+1 divides n), attachment split p (delta-1 for odd delta, delta-2 for
//   even delta).
struct FamilySpec {
    int delta = 0;
    int n = 0;
    int k = 0;
    int alpha = 0;
    int p = 0;

    static FamilySpec from_order(int delta, int n);
    static FamilySpec from_spine(int delta, int k, int alpha = 1);
};

struct TestVector {
    std::vector<double> z;  // z_j = sin((2j-1)pi/4k), j = 1..k
    std::vector<double> a;  // a_j = ((p+1) z_j + (delta-p) z_{j+1})/(delta+1)
    std::vector<double> b;  // b_j = (p z_j + (delta+1-p) z_{j+1})/(delta+1)
    double f_value = 0.0;   // constant component on the coalesced block (= z_k)
};

// Unique spectral-radius maximizer among connected nonregular graphs with max
// degree 3 (n >= 8): end cap by n mod 4, then diamond units, then either a
// degree-2 terminal (odd n) or a pendant (even n).
Graph extremal_delta3(int n);

// Same for max degree 4 (n >= 10): end cap by n mod 5, K4 blocks threaded on
// cut vertices, degree-2 terminal cut.
Graph extremal_delta4(int n);

// Spine of k cut vertices threaded through k-1 disjoint K_delta blocks; cut
// u_i joins p vertices of block i and delta-p of block i-1. Vertex layout: cuts
// u_1..u_k = 0..k-1, then block i occupies k+(i-1)*delta .. k+i*delta-1 (its
// first p vertices attach to u_i, the rest to u_{i+1}).
Graph g_family(const FamilySpec& spec);

// Connected realization of a graphic nonincreasing degree sequence with
// d_{n-1} >= 2, d_n >= 1: canonical Havel-Hakimi, then component-joining
// switches across a non-bridge edge.
Graph realize_connected(const std::vector<int>& seq);

// Near-regular coalescence family on n vertices: g_family joined at u_k with a
// connected realization F of (delta,...,delta,delta-i); for odd delta and even
// n a pendant edge is added at u_1 (appended as the last vertex).
Graph h_family(int delta, int n);

TestVector test_vector(const FamilySpec& spec);

// Closed-form evaluation of the test-vector upper bound on delta - lambda1 via
// the three trigonometric sums
//   sum (z_j - z_{j+1})^2 = 2(k-1) sin^2(pi/4k),
//   sum z_j^2 = (k+1)/2,   sum z_j z_{j+1} = ((k-1)/2) cos(pi/2k).
double gap_upper_closed_form(const FamilySpec& spec);

// True iff seq (nonincreasing) is graphic (Erdos-Gallai).
bool is_graphic(const std::vector<int>& seq);

}  // namespace spex
