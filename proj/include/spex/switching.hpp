#pragma once
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

// Replace edge uv by uw (degrees change at v and w).
struct RotationMove {
    int u, v, w;
};

// Replace edges uv and st by sv and tu (all degrees preserved).
struct SwitchMove {
    int s, t, v, u;
};

bool rotation_valid(const Graph& g, const RotationMove& m);
bool switch_valid(const Graph& g, const SwitchMove& m);

// Throws input_error when the move's preconditions fail on g.
Graph rotate(const Graph& g, const RotationMove& m);
Graph local_switch(const Graph& g, const SwitchMove& m);

// (x_s - x_u)(x_v - x_t) >= -tie_tol for the Perron vector in pd. Exact ties
// (symmetric orbits) count as proper.
bool is_proper_switch(const PerronData& pd, const SwitchMove& m, double tie_tol = 1e-9);

// Greedy hill climb inside the class {connected, nonregular, max degree ==
// delta}: repeatedly applies the first strictly improving move (rotations in
// lex order first, then switches), up to `budget` applied moves. Deterministic.
Graph improving_search(const Graph& g, int delta, long long budget,
                       double tol = 1e-10, double improve_eps = 1e-9);

}  // namespace spex
