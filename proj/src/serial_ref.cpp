#include "pilq/statevector.hpp"

#include <cmath>
#include <stdexcept>

// Serial reference implementations of the parallel kernels. Plain loops,
// no chunking; the tests compare these against the OpenMP paths and the
// bench_kernels target times both.

namespace pilq::serial {

CutTable build_cut_table(const Graph& g) {
    const std::int64_t dim = std::int64_t(1) << g.n;
    CutTable t{g.n, std::vector<double>(dim)};
    for (std::int64_t z = 0; z < dim; ++z) t.values[z] = cut_value(g, Assignment(z));
    return t;
}

void apply_cost_phase(StateVector& s, const CutTable& t, double gamma) {
    if (s.n != t.n) throw std::invalid_argument("serial::apply_cost_phase: dimension mismatch");
    for (std::size_t z = 0; z < s.amps.size(); ++z)
        s.amps[z] *= std::polar(1.0, -gamma * t.values[z]);
}

void apply_mixer(StateVector& s, double beta) {
    const double c = std::cos(beta);
    const std::complex<double> ms{0.0, -std::sin(beta)};
    const std::int64_t dim = std::int64_t(1) << s.n;
    for (int q = 0; q < s.n; ++q) {
        const std::int64_t bit = std::int64_t(1) << q;
        for (std::int64_t z = 0; z < dim; ++z) {
            if (z & bit) continue;
            const auto a0 = s.amps[z];
            const auto a1 = s.amps[z | bit];
            s.amps[z] = c * a0 + ms * a1;
            s.amps[z | bit] = ms * a0 + c * a1;
        }
    }
}

double expectation(const StateVector& s, const CutTable& t) {
    if (s.n != t.n) throw std::invalid_argument("serial::expectation: dimension mismatch");
    long double acc = 0.0L;
    for (std::size_t z = 0; z < s.amps.size(); ++z) acc += std::norm(s.amps[z]) * t.values[z];
    return double(acc);
}

OracleResult max_cut_bruteforce(const Graph& g) {
    if (g.n > kMaxOracleNodes) throw std::runtime_error("serial::max_cut_bruteforce: over cap");
    const std::uint64_t half = std::uint64_t(1) << (g.n - 1);
    OracleResult best{-1.0, 0};
    for (std::uint64_t zz = 0; zz < half; ++zz) {
        const Assignment z = Assignment(zz << 1);
        const double cv = cut_value(g, z);
        if (cv > best.c_star) best = {cv, z};
    }
    return best;
}

} // namespace pilq::serial
