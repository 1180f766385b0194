#pragma once
#include <string>

#include "spex/graph.hpp"

namespace spex {

// Canonical isomorphism code for graphs with n <= 12: the graph6 string of the
// lexicographically smallest adjacency bit matrix over all vertex orderings
// (branch-and-bound with prefix pruning and twin collapsing). Equal codes iff
// isomorphic.
using CanonicalCode = std::string;

CanonicalCode canonical_form(const Graph& g);

// Rebuilds the canonical representative from a code.
Graph graph_from_canonical(const CanonicalCode& code);

}  // namespace spex
