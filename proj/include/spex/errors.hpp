#pragma once
#include <stdexcept>
#include <string>

namespace spex {

// Bad arguments: out-of-range vertices, violated move preconditions, non-graphic
// degree sequences, zero vectors.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Operation undefined on this graph (e.g. diameter/perron of a disconnected graph).
struct graph_domain_error : std::domain_error {
    explicit graph_domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Request exceeds a documented size cap (canonical form n>12, oracle caps,
// construction minimum orders).
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Eigensolver ran out of iterations; carries the best estimate found so far.
struct convergence_error : std::runtime_error {
    double best_lambda;
    double best_residual;
    convergence_error(const std::string& msg, double lambda, double residual)
        : std::runtime_error(msg), best_lambda(lambda), best_residual(residual) {}
};

}  // namespace spex
