#include "pilq/trainer.hpp"
#include "pilq/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace pilq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

bool base_has_edge(const Graph& g, const std::vector<int>& perm, int base_size) {
    std::vector<char> in_base(g.n, 0);
    for (int i = 0; i < base_size; ++i) in_base[perm[i]] = 1;
    for (const auto& e : g.edges)
        if (in_base[e.u] && in_base[e.v]) return true;
    return false;
}

} // namespace

int PhaseSchedule::num_phases() const {
    if (base_size >= target.n) return 1;
    return 1 + (target.n - base_size + stride - 1) / stride;
}

std::vector<int> PhaseSchedule::phase_nodes(int t) const {
    const int count = std::min(base_size + t * stride, target.n);
    return {node_order.begin(), node_order.begin() + count};
}

PhaseSchedule build_schedule(const Graph& g, int base_size, std::uint64_t seed, int stride) {
    if (base_size < 2 || base_size > g.n)
        throw std::invalid_argument("build_schedule: base_size out of [2, n]");
    if (stride < 1) throw std::invalid_argument("build_schedule: stride must be >= 1");

    Rng rng(seed);
    std::vector<int> perm = random_permutation(g.n, rng);

    // An edgeless base graph has a constant objective, so resample the
    // subset until it induces at least one edge (waived for edgeless
    // targets). If resampling fails, seed the base with a random edge.
    if (!g.edges.empty() && base_size < g.n) {
        constexpr int kResampleCap = 50;
        int attempt = 0;
        while (!base_has_edge(g, perm, base_size) && attempt < kResampleCap) {
            perm = random_permutation(g.n, rng);
            ++attempt;
        }
        if (!base_has_edge(g, perm, base_size)) {
            const Edge& e = g.edges[rng.below(g.edges.size())];
            std::vector<int> rest;
            for (int v : random_permutation(g.n, rng))
                if (v != e.u && v != e.v) rest.push_back(v);
            perm = {e.u, e.v};
            perm.insert(perm.end(), rest.begin(), rest.end());
        }
    }
    return {g, std::move(perm), base_size, stride};
}

EarlyBreakDecision early_break_check(const Graph& phase_graph, const ParamVector& params, int k,
                                     int m, std::uint64_t seed) {
    const double bar = random_partition_max(phase_graph, k, seed);
    const SampledCut bc = best_sampled_cut(phase_graph, params, m, mix_seed(seed, 1));
    return {bc.value >= bar, bc.value, bar};
}

namespace {

// One optimization phase; shared by the PIL loop and the standard trainer.
PhaseResult run_phase(const Graph& phase_graph, const ParamVector& init, const TrainerConfig& cfg,
                      int phase_index, std::uint64_t phase_seed, bool allow_break) {
    const auto t0 = Clock::now();
    const CutTable table = build_cut_table(phase_graph);
    const double bar = random_partition_max(phase_graph, cfg.k, phase_seed);

    double hook_cut = 0.0;
    bool have_hook_cut = false;
    std::uint64_t check_index = 0;
    StopHook hook;
    if (allow_break) {
        hook = [&](const ParamVector& pv) {
            double cut;
            if (cfg.early_break_use_expectation) {
                cut = expectation(prepare_state(table, pv), table);
            } else {
                cut = best_sampled_cut(table, pv, cfg.shots, mix_seed(phase_seed, 1 + check_index)).value;
            }
            ++check_index;
            hook_cut = cut;
            have_hook_cut = true;
            return cut >= bar;
        };
    }

    const OptimResult res = optimize(phase_graph, init, cfg.opt, hook);

    PhaseResult pr;
    pr.phase_index = phase_index;
    pr.n = phase_graph.n;
    pr.graph_hash = phase_graph.hash();
    pr.init_params = init;
    pr.final_params = res.params;
    pr.objective = res.objective;
    pr.random_bar = bar;
    pr.early_broken = res.early_broken;
    pr.iterations = res.iterations;
    pr.evals = res.evals;
    pr.best_cut = (res.early_broken && have_hook_cut)
                      ? hook_cut
                      : best_sampled_cut(table, res.params, cfg.shots, mix_seed(phase_seed, 0)).value;
    pr.wall_time = seconds_since(t0);
    return pr;
}

void grade(TrainReport& r, const Graph& target) {
    const OracleResult oracle = max_cut_bruteforce(target);
    r.c_star = oracle.c_star;
    if (oracle.c_star == 0.0) {
        r.zero_optimum = true;
        r.ar_sampled = 1.0;
        r.ar_expectation = 1.0;
    } else {
        r.ar_sampled = r.c_a / oracle.c_star;
        r.ar_expectation = r.objective / oracle.c_star;
    }
}

} // namespace

TrainReport train_pil(const Graph& g, const TrainerConfig& cfg) {
    const auto t0 = Clock::now();
    const PhaseSchedule schedule = build_schedule(g, std::min(cfg.base_size, g.n),
                                                  mix_seed(cfg.seed, 1), cfg.phase_stride);
    const int phases = schedule.num_phases();

    TrainReport r;
    r.method = "pil";
    r.node_order = schedule.node_order;
    r.base_size = schedule.base_size;

    ParamVector params = random_params(cfg.p, mix_seed(cfg.seed, 2));
    InducedSubgraph last_sub;
    for (int t = 0; t < phases; ++t) {
        last_sub = induced_subgraph(g, schedule.phase_nodes(t));
        // The mechanism is scoped to the incremental phases: no break on
        // the base graph, none on the final target phase.
        const bool allow_break = t > 0 && t < phases - 1;
        PhaseResult pr = run_phase(last_sub.graph, params, cfg, t, mix_seed(cfg.seed, 0x100 + t),
                                   allow_break);
        params = pr.final_params; // bit-exact reuse into the next phase
        r.phases.push_back(std::move(pr));
    }

    r.final_params = params;
    r.objective = r.phases.back().objective;
    const SampledCut final_cut =
        best_sampled_cut(last_sub.graph, params, cfg.shots, mix_seed(cfg.seed, 3));
    r.c_a = final_cut.value;
    // Map the witness bits from phase-local labels back to target labels.
    Assignment mapped = 0;
    for (int j = 0; j < last_sub.graph.n; ++j)
        if (final_cut.witness >> j & 1u) mapped |= Assignment(1) << last_sub.node_map[j];
    r.witness = assignment_to_string(mapped, g.n);
    r.total_time = seconds_since(t0);

    grade(r, g);
    return r;
}

TrainReport train_standard(const Graph& g, const TrainerConfig& cfg) {
    const auto t0 = Clock::now();

    TrainReport r;
    r.method = "standard";
    r.node_order.resize(g.n);
    for (int i = 0; i < g.n; ++i) r.node_order[i] = i;
    r.base_size = g.n;

    const ParamVector init = random_params(cfg.p, mix_seed(cfg.seed, 2));
    PhaseResult pr = run_phase(g, init, cfg, 0, mix_seed(cfg.seed, 0x100), false);
    r.final_params = pr.final_params;
    r.objective = pr.objective;
    r.phases.push_back(std::move(pr));

    const SampledCut final_cut =
        best_sampled_cut(g, r.final_params, cfg.shots, mix_seed(cfg.seed, 3));
    r.c_a = final_cut.value;
    r.witness = assignment_to_string(final_cut.witness, g.n);
    r.total_time = seconds_since(t0);

    grade(r, g);
    return r;
}

std::string double_to_exact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double exact_to_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

nlohmann::json params_to_json(const ParamVector& pv) {
    nlohmann::json j;
    for (double v : pv.gammas) j["gammas"].push_back(double_to_exact(v));
    for (double v : pv.betas) j["betas"].push_back(double_to_exact(v));
    if (pv.gammas.empty()) j["gammas"] = nlohmann::json::array();
    if (pv.betas.empty()) j["betas"] = nlohmann::json::array();
    return j;
}

ParamVector params_from_json(const nlohmann::json& j) {
    ParamVector pv;
    for (const auto& s : j.at("gammas")) pv.gammas.push_back(exact_to_double(s.get<std::string>()));
    for (const auto& s : j.at("betas")) pv.betas.push_back(exact_to_double(s.get<std::string>()));
    return pv;
}

nlohmann::json report_to_json(const TrainReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["node_order"] = r.node_order;
    j["base_size"] = r.base_size;
    j["final_params"] = params_to_json(r.final_params);
    j["c_a"] = r.c_a;
    j["witness"] = r.witness;
    j["c_star"] = r.c_star;
    j["objective"] = r.objective;
    j["ar_sampled"] = r.ar_sampled;
    j["ar_expectation"] = r.ar_expectation;
    j["zero_optimum"] = r.zero_optimum;
    j["total_time"] = r.total_time;
    j["phases"] = nlohmann::json::array();
    for (const auto& ph : r.phases) {
        nlohmann::json p;
        p["phase_index"] = ph.phase_index;
        p["n"] = ph.n;
        p["graph_hash"] = ph.graph_hash;
        p["init_params"] = params_to_json(ph.init_params);
        p["final_params"] = params_to_json(ph.final_params);
        p["objective"] = ph.objective;
        p["best_cut"] = ph.best_cut;
        p["random_bar"] = ph.random_bar;
        p["early_broken"] = ph.early_broken;
        p["iterations"] = ph.iterations;
        p["evals"] = ph.evals;
        p["wall_time"] = ph.wall_time;
        j["phases"].push_back(std::move(p));
    }
    return j;
}

} // namespace pilq
