#include "pilq/qaoa.hpp"
#include "pilq/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pilq {

ParamVector random_params(int p, std::uint64_t seed) {
    Rng rng(seed);
    ParamVector pv;
    pv.gammas.resize(p);
    pv.betas.resize(p);
    for (int l = 0; l < p; ++l) pv.gammas[l] = rng.uniform01() * 2.0 * std::numbers::pi;
    for (int l = 0; l < p; ++l) pv.betas[l] = rng.uniform01() * std::numbers::pi;
    return pv;
}

StateVector prepare_state(const CutTable& t, const ParamVector& params) {
    StateVector s = init_plus_state(t.n);
    for (int l = 0; l < params.p(); ++l) {
        apply_cost_phase(s, t, params.gammas[l]);
        apply_mixer(s, params.betas[l]);
    }
    return s;
}

double evaluate_objective(const Graph& g, const ParamVector& params) {
    const CutTable t = build_cut_table(g);
    const StateVector s = prepare_state(t, params);
    return expectation(s, t);
}

SampledCut best_sampled_cut(const CutTable& t, const ParamVector& params, int m,
                            std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("best_sampled_cut: m must be >= 1");
    const StateVector s = prepare_state(t, params);
    const auto samples = sample_bitstrings(s, m, seed);
    SampledCut best{-1.0, 0};
    for (Assignment z : samples) {
        const double cv = t.values[z];
        if (cv > best.value) best = {cv, z};
    }
    return best;
}

SampledCut best_sampled_cut(const Graph& g, const ParamVector& params, int m, std::uint64_t seed) {
    return best_sampled_cut(build_cut_table(g), params, m, seed);
}

namespace {

// Solve A x = b (dim x dim) by Gaussian elimination with partial
// pivoting. Returns false when the system is numerically singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const int dim = int(b.size());
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < dim; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(dim, 0.0);
    for (int r = dim - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < dim; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return true;
}

std::vector<double> flatten(const ParamVector& pv) {
    std::vector<double> x = pv.gammas;
    x.insert(x.end(), pv.betas.begin(), pv.betas.end());
    return x;
}

ParamVector unflatten(const std::vector<double>& x) {
    const int p = int(x.size()) / 2;
    ParamVector pv;
    pv.gammas.assign(x.begin(), x.begin() + p);
    pv.betas.assign(x.begin() + p, x.end());
    return pv;
}

} // namespace

OptimResult optimize(const Graph& g, const ParamVector& init, const OptimizerSettings& cfg,
                     const StopHook& stop_hook) {
    if (cfg.max_iters < 1) throw std::invalid_argument("optimize: max_iters must be >= 1");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("optimize: tol must be > 0");
    for (double v : flatten(init))
        if (!std::isfinite(v)) throw std::invalid_argument("optimize: non-finite initial params");

    const auto t_start = std::chrono::steady_clock::now();
    const CutTable table = build_cut_table(g);

    int evals = 0;
    auto objective = [&](const std::vector<double>& x) {
        const StateVector s = prepare_state(table, unflatten(x));
        const double val = -expectation(s, table); // minimize -<C>
        ++evals;
        if (!std::isfinite(val)) {
            std::string dump = "optimize: non-finite objective at [";
            for (double v : x) dump += std::to_string(v) + " ";
            throw std::runtime_error(dump + "]");
        }
        return val;
    };

    const int dim = int(flatten(init).size());
    std::vector<double> best_x = flatten(init);
    double best_f = objective(best_x);
    int iters = 0;
    bool early = false;

    auto finish = [&]() {
        OptimResult res;
        res.params = unflatten(best_x);
        res.objective = -best_f;
        res.iterations = iters;
        res.evals = evals;
        res.early_broken = early;
        res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        return res;
    };

    if (stop_hook && stop_hook(unflatten(best_x))) {
        early = true;
        return finish();
    }

    double rho = cfg.rho_begin;
    int consec_rejects = 0;

    // Simplex of dim+1 points carrying the linear interpolation model.
    std::vector<std::vector<double>> pts;
    std::vector<double> fs;
    auto rebuild = [&]() {
        pts.assign(1, best_x);
        fs.assign(1, best_f);
        for (int i = 0; i < dim; ++i) {
            auto x = best_x;
            x[i] += rho;
            pts.push_back(x);
            fs.push_back(objective(x));
        }
    };
    rebuild();

    while (iters < cfg.max_iters && rho > cfg.rho_end) {
        // Keep the best vertex at slot 0.
        const int bi = int(std::min_element(fs.begin(), fs.end()) - fs.begin());
        std::swap(pts[0], pts[bi]);
        std::swap(fs[0], fs[bi]);

        // Fit the linear model through the simplex: gradient from the
        // dim difference equations.
        std::vector<std::vector<double>> a(dim, std::vector<double>(dim));
        std::vector<double> b(dim);
        for (int i = 0; i < dim; ++i) {
            for (int c = 0; c < dim; ++c) a[i][c] = pts[i + 1][c] - pts[0][c];
            b[i] = fs[i + 1] - fs[0];
        }
        std::vector<double> grad;
        if (!solve_linear(a, b, grad)) {
            rho *= 0.5;
            rebuild();
            continue;
        }
        double gnorm = 0.0;
        for (double v : grad) gnorm += v * v;
        gnorm = std::sqrt(gnorm);
        if (gnorm < 1e-15) {
            rho *= 0.5;
            rebuild();
            continue;
        }

        // Trust-region step of length rho along the model descent
        // direction from the best vertex.
        std::vector<double> xn = pts[0];
        for (int c = 0; c < dim; ++c) xn[c] -= rho * grad[c] / gnorm;
        const double fn = objective(xn);
        ++iters;

        // The simplex is kept across trust-radius reductions; points
        // spaced at the old radius still define a valid linear model.
        // Only a degenerate fit (handled above) forces a rebuild.
        const double improvement = best_f - fn;
        if (fn < best_f) {
            const int wi = int(std::max_element(fs.begin(), fs.end()) - fs.begin());
            pts[wi] = xn;
            fs[wi] = fn;
            best_x = xn;
            best_f = fn;
            if (stop_hook && stop_hook(unflatten(best_x))) {
                early = true;
                break;
            }
        } else {
            const int wi = int(std::max_element(fs.begin(), fs.end()) - fs.begin());
            // Refresh the model geometry with any point better than the
            // worst vertex.
            if (fn < fs[wi]) {
                pts[wi] = xn;
                fs[wi] = fn;
            }
        }
        // Progress below tol counts as a failure at this radius and
        // shrinks it; strong progress re-opens the radius (never past
        // rho_begin) so an early shrink cannot trap the search in a
        // tiny-step crawl down a long valley.
        if (improvement >= cfg.tol) {
            consec_rejects = 0;
            if (improvement >= 10.0 * cfg.tol) rho = std::min(rho * 2.0, cfg.rho_begin);
        } else if (++consec_rejects >= 1) {
            rho *= 0.5;
            consec_rejects = 0;
        }
    }

    return finish();
}

} // namespace pilq
