#include "pilq/statevector.hpp"
#include "pilq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pilq {

namespace {

void check_qubits(int n, const char* where) {
    if (n < 1 || n > kMaxQubits)
        throw std::runtime_error(std::string(where) + ": qubit count out of [1, 24]");
}

std::int64_t dim_of(int n) { return std::int64_t(1) << n; }

} // namespace

double StateVector::norm() const {
    long double s = 0.0L;
    for (const auto& a : amps) s += std::norm(a);
    return double(std::sqrt(s));
}

CutTable build_cut_table(const Graph& g) {
    check_qubits(g.n, "build_cut_table");
    const std::int64_t dim = dim_of(g.n);
    CutTable t{g.n, std::vector<double>(dim)};
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < dim; ++z) {
        long double s = 0.0L;
        for (const auto& e : g.edges)
            if (((z >> e.u) ^ (z >> e.v)) & 1) s += e.w;
        t.values[z] = double(s);
    }
    return t;
}

StateVector init_plus_state(int n) {
    check_qubits(n, "init_plus_state");
    const std::int64_t dim = dim_of(n);
    const double a = std::pow(2.0, -0.5 * n);
    return {n, std::vector<std::complex<double>>(dim, {a, 0.0})};
}

void apply_cost_phase(StateVector& s, const CutTable& t, double gamma) {
    if (s.n != t.n) throw std::invalid_argument("apply_cost_phase: dimension mismatch");
    const std::int64_t dim = dim_of(s.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < dim; ++z)
        s.amps[z] *= std::polar(1.0, -gamma * t.values[z]);
}

void apply_mixer(StateVector& s, double beta) {
    const double c = std::cos(beta);
    const std::complex<double> ms{0.0, -std::sin(beta)};
    const std::int64_t dim = dim_of(s.n);
    for (int q = 0; q < s.n; ++q) {
        const std::int64_t bit = std::int64_t(1) << q;
#pragma omp parallel for schedule(static)
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
    if (s.n != t.n) throw std::invalid_argument("expectation: dimension mismatch");
    const std::int64_t dim = dim_of(s.n);
    // Fixed chunk grid so the summation order does not depend on the
    // thread count.
    const int chunks = int(std::min<std::int64_t>(256, dim));
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t lo = dim * c / chunks;
        const std::int64_t hi = dim * (c + 1) / chunks;
        long double p = 0.0L;
        for (std::int64_t z = lo; z < hi; ++z) p += std::norm(s.amps[z]) * t.values[z];
        partial[c] = double(p);
    }
    long double total = 0.0L;
    for (double p : partial) total += p;
    return double(total);
}

std::vector<Assignment> sample_bitstrings(const StateVector& s, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample_bitstrings: m must be >= 1");
    const double nrm = s.norm();
    if (std::abs(nrm - 1.0) > 1e-8)
        throw std::invalid_argument("sample_bitstrings: state norm violates |norm-1| <= 1e-8");

    const std::int64_t dim = dim_of(s.n);
    std::vector<double> cdf(dim);
    long double acc = 0.0L;
    for (std::int64_t z = 0; z < dim; ++z) {
        acc += std::norm(s.amps[z]);
        cdf[z] = double(acc);
    }
    cdf[dim - 1] = 1.0;

    Rng rng(seed);
    std::vector<Assignment> out(m);
    for (int i = 0; i < m; ++i) {
        const double u = rng.uniform01();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out[i] = Assignment(it - cdf.begin());
    }
    return out;
}

} // namespace pilq
