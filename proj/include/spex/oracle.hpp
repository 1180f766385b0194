#pragma once
#include <string>
#include <vector>

#include "spex/canonical.hpp"
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

struct ExtremalReport {
    int n = 0;
    int delta = 0;
    double lambda_max = 0.0;
    std::vector<Graph> witnesses;               // deduplicated up to isomorphism
    std::vector<CanonicalCode> witness_codes;   // sorted, parallel to witnesses
    std::vector<std::vector<int>> witness_profiles;
    long long count_enumerated = 0;  // degree-sorted representatives inspected
};

// Exhaustive maximum of lambda1 over connected nonregular graphs with max
// degree exactly delta on n labeled vertices. The search walks degree-sorted
// representatives only (every isomorphism class keeps at least one), so
// lambda_max is exact and the witness list is complete up to isomorphism.
// threads > 1 partitions the tree by the first vertex's neighborhood; serial
// and parallel runs produce identical reports.
ExtremalReport enumerate_extremal(int n, int delta, int threads = 1, bool force = false);

int oracle_default_cap(int delta);

// Reference implementations for the completeness tests (n <= 6): the filter
// over all 2^C(n,2) edge subsets.
struct NaiveClassStats {
    long long labeled_members = 0;
    std::vector<CanonicalCode> member_classes;  // sorted canonical codes
    double lambda_max = 0.0;
    std::vector<CanonicalCode> witness_codes;
};
NaiveClassStats naive_extremal(int n, int delta);

// Canonical codes of every class the pruned enumerator touches (test aid).
std::vector<CanonicalCode> enumerate_member_classes(int n, int delta);

struct LemmaAudit {
    bool s_is_clique = false;
    bool s_size_ok = false;
    bool neighborhoods_nested = false;
    bool s_below_t = false;
    bool deletion_connected[3] = {false, false, false};  // k = 1, 2, 3
    std::string details;

    bool all_ok() const {
        return s_is_clique && s_size_ok && neighborhoods_nested && s_below_t &&
               deletion_connected[0] && deletion_connected[1] && deletion_connected[2];
    }
};

// Audits the structural facts that hold for spectral-radius maximizers: the
// deficient set S induces a clique, |S| <= delta-1, Perron order on S matches
// nesting of T-neighborhoods, S sits below T in Perron order, and removing the
// top-k Perron vertices (k = 1..3) leaves the graph connected.
LemmaAudit verify_structure_lemmas(const Graph& g, const PerronData& pd, int delta,
                                   double tie_tol = 1e-9);

}  // namespace spex
