#pragma once

#include "pilq/graph.hpp"
#include "pilq/oracle.hpp"
#include "pilq/statevector.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace pilq {

// The 2p angles of the standard QAOA ansatz. Independent of graph size,
// which is what makes cross-phase reuse a plain copy.
struct ParamVector {
    std::vector<double> gammas;
    std::vector<double> betas;

    int p() const { return int(gammas.size()); }
    bool operator==(const ParamVector&) const = default;
};

// First-phase initialization: gamma ~ U[0, 2pi), beta ~ U[0, pi).
ParamVector random_params(int p, std::uint64_t seed);

struct OptimizerSettings {
    int max_iters = 500;
    double tol = 1e-4;
    double rho_begin = 0.5;  // initial trust radius (radians)
    double rho_end = 1e-4;   // final trust radius
};

struct OptimResult {
    ParamVector params;
    double objective = 0.0; // final <C>, reported with positive sign
    int iterations = 0;
    int evals = 0;
    bool early_broken = false;
    double wall_time = 0.0;
};

// Runs the p-layer circuit on |+...+> and returns the final state.
StateVector prepare_state(const CutTable& t, const ParamVector& params);

// <C> of the p-layer circuit; exact from amplitudes.
double evaluate_objective(const Graph& g, const ParamVector& params);

struct SampledCut {
    double value;
    Assignment witness;
};

// Best cut over m measurement samples of the prepared state.
SampledCut best_sampled_cut(const Graph& g, const ParamVector& params, int m, std::uint64_t seed);
SampledCut best_sampled_cut(const CutTable& t, const ParamVector& params, int m,
                            std::uint64_t seed);

// Returning true stops the optimization with early_broken set.
using StopHook = std::function<bool(const ParamVector&)>;

// Derivative-free maximization of <C> via a COBYLA-style linear-model
// trust region (internally minimizes -<C>). The hook is invoked at the
// initial point and after every accepted iterate. Fully deterministic.
OptimResult optimize(const Graph& g, const ParamVector& init, const OptimizerSettings& cfg,
                     const StopHook& stop_hook = nullptr);

} // namespace pilq
