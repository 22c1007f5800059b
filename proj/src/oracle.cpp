#include "pilq/oracle.hpp"
#include "pilq/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pilq {

std::string assignment_to_string(Assignment z, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (z >> i & 1u) s[i] = '1';
    return s;
}

double cut_value(const Graph& g, Assignment z) {
    if (g.n > kMaxOracleNodes) throw std::runtime_error("cut_value: node count over enumeration cap");
    if (g.n < 32 && (z >> g.n) != 0)
        throw std::invalid_argument("cut_value: assignment length mismatch");
    long double s = 0.0L;
    for (const auto& e : g.edges)
        if (((z >> e.u) ^ (z >> e.v)) & 1u) s += e.w;
    return double(s);
}

OracleResult max_cut_bruteforce(const Graph& g) {
    if (g.n > kMaxOracleNodes) throw std::runtime_error("max_cut_bruteforce: node count over cap");
    const std::uint64_t half = std::uint64_t(1) << (g.n - 1);

    // Fixed chunk grid keeps the max-reduction independent of thread count.
    const int chunks = int(std::min<std::uint64_t>(256, half));
    std::vector<OracleResult> best(chunks, {-1.0, 0});

#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const std::uint64_t lo = half * c / chunks;
        const std::uint64_t hi = half * (c + 1) / chunks;
        OracleResult b{-1.0, 0};
        for (std::uint64_t zz = lo; zz < hi; ++zz) {
            // Node 0 stays on side 0: encode the free bits into bits 1..n-1.
            const Assignment z = Assignment(zz << 1);
            const double cv = cut_value(g, z);
            if (cv > b.c_star) b = {cv, z};
        }
        best[c] = b;
    }

    OracleResult out{-1.0, 0};
    for (const auto& b : best)
        if (b.c_star > out.c_star || (b.c_star == out.c_star && b.witness < out.witness)) out = b;
    return out;
}

double random_partition_max(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_partition_max: k must be >= 1");
    Rng rng(seed);
    const std::uint64_t mask = (g.n == 64) ? ~0ULL : ((std::uint64_t(1) << g.n) - 1);
    double best = 0.0;
    bool first = true;
    for (int i = 0; i < k; ++i) {
        const Assignment z = Assignment(rng.next_u64() & mask);
        const double cv = cut_value(g, z);
        if (first || cv > best) {
            best = cv;
            first = false;
        }
    }
    return best;
}

} // namespace pilq
