#pragma once

#include "pilq/graph.hpp"

#include <cstdint>
#include <string>

namespace pilq {

// Basis assignment: bit i of the index is the partition side of node i
// (little-endian, shared convention with the statevector simulator).
using Assignment = std::uint32_t;

inline constexpr int kMaxOracleNodes = 24;

std::string assignment_to_string(Assignment z, int n);

struct OracleResult {
    double c_star;
    Assignment witness;
};

// Sum of w(u,v) over edges whose endpoints land on different sides.
double cut_value(const Graph& g, Assignment z);

// Exhaustive enumeration over 2^(n-1) assignments (node 0 fixed to side 0
// by complement symmetry). Ties broken toward the lowest bitstring value.
OracleResult max_cut_bruteforce(const Graph& g);

// Best cut over k uniformly random assignments; the "randomly solved
// module" of the early-break mechanism.
double random_partition_max(const Graph& g, int k, std::uint64_t seed);

} // namespace pilq
