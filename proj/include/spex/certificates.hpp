#pragma once
#include <optional>
#include <string>
#include <vector>

#include "spex/embedding.hpp"
#include "spex/graph.hpp"

namespace spex {

// A forbidden gadget: the pattern graph, its ports (vertices whose dangling
// half-edges leave the gadget, with multiplicities), and optionally a
// degree-compatible replacement on the same vertex count whose port slots
// receive the pattern's dangling edges in order.
struct PatternSpec {
    std::string name;
    Graph pattern;
    std::vector<std::pair<int, int>> ports;  // (vertex, stub count), slot order
    std::optional<Graph> replacement;
    std::vector<std::pair<int, int>> replacement_ports;
    int applicable_delta = 0;

    std::vector<int> extra_degrees() const;  // per-vertex stub counts
};

// The gadget library: delta = 3 -> {D1, D2 (-> D2~), D3 (-> D3~), D4};
// delta = 4 -> {M1..M7 with replacements}. Transcribed once; counts pinned by
// unit tests.
const std::vector<PatternSpec>& forbidden_patterns(int delta);

struct Violation {
    std::string pattern;
    Embedding embedding;  // first occurrence
};

// A pattern counts as contained when it embeds induced with the boundary
// multiplicities of its figure: interior vertices have no host edges leaving
// the image, each port has exactly its stub count, and (when a replacement
// exists) the dangling edges can be rewired onto the replacement ports without
// creating a multi-edge.
std::vector<Violation> audit_forbidden(const Graph& g, int delta);

// lambda1(host with the pattern replaced) - lambda1(host). The surgery swaps
// the pattern's internal edges for the replacement's and rewires the dangling
// edges slot by slot; port degrees are preserved exactly.
double replacement_delta(const Graph& host, const Embedding& emb, const PatternSpec& spec,
                         double tol = 1e-12);

// The rewired graph itself (exposed for tests).
Graph apply_replacement(const Graph& host, const Embedding& emb, const PatternSpec& spec);

struct IdentityReport {
    std::string name;
    bool hypothesis_met = false;
    double residual = 0.0;  // max |LHS - RHS| over the identity group
    std::string note;
};

// Evaluates the replacement-vector algebra on a host realizing one of the
// labeled configurations (D2, M1, M4), using lambda1(host) and the measured
// Perron components. Configurations whose labeling hypothesis fails on this
// host are reported as hypothesis-not-met rather than as failures.
std::vector<IdentityReport> quadratic_form_identities(const Graph& host);

struct SignReport {
    std::string polynomial;
    std::string claim;
    double value = 0.0;       // the witnessing value (min over a grid, or the point value)
    bool claim_holds = false;
};

// Sign suite for the three surd-coefficient polynomials behind the replacement
// norms (f, g, h), their common root at 4, and the coefficientwise comparison
// of the degree-3 rational pair on (2.8, 3).
std::vector<SignReport> polynomial_suite();

// Ready-made hosts that realize each replaceable pattern with its labeling
// hypothesis (used by the gain tests and the identity checks).
Graph replacement_demo_host(const std::string& pattern_name);
Graph d1_demo_host();

double poly_f(double x);
double poly_g(double x);
double poly_h(double x);

}  // namespace spex
