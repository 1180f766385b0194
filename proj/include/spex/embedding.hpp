#pragma once
#include <optional>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Injective map pattern-vertex -> host-vertex realizing the pattern as an
// induced subgraph (adjacency and non-adjacency match on every pattern pair).
// boundary lists the pattern vertices whose image carries host edges leaving
// the pattern image.
struct Embedding {
    std::vector<int> map;       // pattern vertex i -> map[i]
    std::vector<int> boundary;  // pattern vertices with edges leaving the image
};

// Lexicographically first induced embedding of pattern into g (ordered by the
// image of pattern vertex 0, then 1, ...). declared_boundary is carried as an
// annotation hint; it does not constrain the search (any vertex may have host
// edges leaving the image; the returned boundary is the computed one).
std::optional<Embedding> find_induced_embedding(const Graph& g, const Graph& pattern,
                                                const std::vector<int>& declared_boundary = {});

// Same search with exact boundary degrees: vertex i of the pattern must have
// exactly extra_degree[i] host edges leaving the image (0 for interior
// vertices). This is the containment notion used by the forbidden-pattern
// audit, where dangling half-edges in a gadget are part of its definition.
std::optional<Embedding> find_induced_embedding_exact_degrees(
    const Graph& g, const Graph& pattern, const std::vector<int>& extra_degree);

// All embeddings under the exact-degree semantics (deduplicated images are the
// caller's business; used by tests and the audit's rewiring check).
std::vector<Embedding> all_induced_embeddings_exact_degrees(
    const Graph& g, const Graph& pattern, const std::vector<int>& extra_degree,
    size_t limit = SIZE_MAX);

}  // namespace spex
