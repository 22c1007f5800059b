#pragma once

#include "pilq/graph.hpp"
#include "pilq/oracle.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace pilq {

inline constexpr int kMaxQubits = 24;

// Diagonal MaxCut cost operator: values[z] = C(z) for basis index z,
// bit i of z = side of node i.
struct CutTable {
    int n = 0;
    std::vector<double> values;
};

struct StateVector {
    int n = 0;
    std::vector<std::complex<double>> amps;

    double norm() const;
};

CutTable build_cut_table(const Graph& g);

// Uniform superposition |+...+>.
StateVector init_plus_state(int n);

// amps[z] *= exp(-i * gamma * C(z)).
void apply_cost_phase(StateVector& s, const CutTable& t, double gamma);

// exp(-i * beta * X) on every qubit, one stride-2^q butterfly pass each.
void apply_mixer(StateVector& s, double beta);

// Sum_z |amps[z]|^2 * C(z), exact from amplitudes.
double expectation(const StateVector& s, const CutTable& t);

// m inverse-CDF draws from the |amps|^2 distribution. The state's norm
// must be within 1e-8 of 1.
std::vector<Assignment> sample_bitstrings(const StateVector& s, int m, std::uint64_t seed);

// Serial reference kernels, kept for testing the OpenMP paths and for the
// kernel benchmark. Semantics identical to the functions above.
namespace serial {
CutTable build_cut_table(const Graph& g);
void apply_cost_phase(StateVector& s, const CutTable& t, double gamma);
void apply_mixer(StateVector& s, double beta);
double expectation(const StateVector& s, const CutTable& t);
OracleResult max_cut_bruteforce(const Graph& g);
} // namespace serial

} // namespace pilq
