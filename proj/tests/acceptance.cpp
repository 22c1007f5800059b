// Acceptance gate: ten checks, one PASS/FAIL line each. Exit code is the
// number of failed checks.

#include "pilq/bench.hpp"
#include "pilq/graph.hpp"
#include "pilq/oracle.hpp"
#include "pilq/qaoa.hpp"
#include "pilq/rng.hpp"
#include "pilq/statevector.hpp"
#include "pilq/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pilq;
namespace fs = std::filesystem;

namespace {

int failures = 0;
std::vector<std::string> lines(11);

// Lines are buffered and printed in criterion order at the end; the
// wall-clock-sensitive check runs first, before the heap gets busy.
void report(int idx, bool ok, const std::string& what, double secs) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s criterion %2d: %s (%.1fs)", ok ? "PASS" : "FAIL", idx,
                  what.c_str(), secs);
    lines[idx] = buf;
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

Graph cycle_graph(int n) {
    Graph g{n, false, {}};
    for (int i = 0; i < n; ++i) {
        int u = i, v = (i + 1) % n;
        if (u > v) std::swap(u, v);
        g.edges.push_back({u, v, 1.0});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return g;
}

// 1. Brute-force oracle against closed forms.
void criterion1() {
    Timer t;
    bool ok = true;
    for (int n = 4; n <= 12; ++n)
        ok &= max_cut_bruteforce(cycle_graph(n)).c_star == double(n % 2 == 0 ? n : n - 1);
    for (int n = 3; n <= 10; ++n)
        ok &= max_cut_bruteforce(generate_complete(n, false, 0)).c_star ==
              double((n / 2) * (n - n / 2));
    ok &= t.secs() < 1.0;
    report(1, ok, "oracle matches cycle/complete closed forms exactly", t.secs());
}

// 2. Simulator expectation vs independent recomputation; norms per layer.
void criterion2() {
    Timer t;
    bool ok = true;
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + int(rng.below(6)); // 3..8
        const int p = 1 + int(rng.below(3)); // 1..3
        const Graph g = generate_random(n, 0.5, trial % 2 == 0, rng.next_u64());
        const CutTable table = build_cut_table(g);
        StateVector s = init_plus_state(n);
        const ParamVector pv = random_params(p, rng.next_u64());
        for (int l = 0; l < p; ++l) {
            apply_cost_phase(s, table, pv.gammas[l]);
            apply_mixer(s, pv.betas[l]);
            ok &= std::abs(s.norm() - 1.0) < 1e-10;
        }
        double indep = 0.0;
        for (std::size_t z = 0; z < s.amps.size(); ++z)
            indep += std::norm(s.amps[z]) * cut_value(g, Assignment(z));
        ok &= std::abs(expectation(s, table) - indep) < 1e-9;
    }
    ok &= t.secs() < 10.0;
    report(2, ok, "simulator expectation within 1e-9 of recomputation, norms within 1e-10",
           t.secs());
}

// 3. All-zero angles leave the uniform state: <C> = W/2.
void criterion3() {
    Timer t;
    bool ok = true;
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + int(rng.below(6));
        const Graph g = generate_random(n, 0.5, trial % 2 == 0, rng.next_u64());
        const ParamVector zeros{std::vector<double>(3, 0.0), std::vector<double>(3, 0.0)};
        ok &= std::abs(evaluate_objective(g, zeros) - g.total_weight() / 2.0) < 1e-9;
    }
    report(3, ok, "identity circuit gives <C> = W/2 within 1e-9 on 50 instances", t.secs());
}

// 4. Single-edge optimization vs a 100x100 angle-grid optimum.
void criterion4() {
    Timer t;
    const Graph k2{2, false, {{0, 1, 1.0}}};
    const CutTable table = build_cut_table(k2);
    double grid_opt = 0.0;
    for (int i = 0; i < 100; ++i)
        for (int j = 0; j < 100; ++j) {
            const double gmm = 2.0 * std::numbers::pi * i / 100.0;
            const double bta = std::numbers::pi * j / 100.0;
            grid_opt = std::max(grid_opt, expectation(prepare_state(table, {{gmm}, {bta}}), table));
        }
    int good = 0;
    for (std::uint64_t s = 0; s < 10; ++s)
        if (optimize(k2, random_params(1, mix_seed(44, s)), {}).objective >= 0.95 * grid_opt)
            ++good;
    const bool ok = good >= 9 && grid_opt > 0.99 && t.secs() < 5.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "single-edge p=1 reaches 0.95 of grid optimum %.4f in %d/10 seeds", grid_opt,
                  good);
    report(4, ok, buf, t.secs());
}

nlohmann::json crit5_detail; // kept for criterion 8
std::vector<nlohmann::json> crit6_pil_reports;

// 5. Incremental training quality on unweighted 2-regular graphs n=5..10.
void criterion5() {
    Timer t;
    ExperimentConfig cfg;
    for (const auto& spec : dataset_grid(false, {"regular"}, 0))
        if (spec.d == 2) cfg.instances.push_back(spec);
    cfg.methods = {"pil"};
    cfg.p = 3;
    cfg.repeats = 10;
    cfg.master_seed = 11;
    const BenchOutput out = run_benchmark_rows(cfg);
    crit5_detail = out.detail;
    double avg_of_avg = 0.0, avg_of_max = 0.0;
    for (const auto& row : out.rows) {
        avg_of_avg += row.ar_avg / out.rows.size();
        avg_of_max += row.ar_max / out.rows.size();
    }
    const bool ok = out.failures == 0 && out.rows.size() == 6 && avg_of_avg >= 0.95 &&
                    avg_of_max >= 0.98 && t.secs() < 900.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "2-regular n=5..10 x10 repeats: ar_avg %.4f (>=0.95), ar_max %.4f (>=0.98)",
                  avg_of_avg, avg_of_max);
    report(5, ok, buf, t.secs());
}

// 6. Warm-start wall-time comparison on weighted random n=10 instances.
// Runs are timed one at a time on one thread so the clocks are clean.
void criterion6() {
    Timer t;
#ifdef _OPENMP
    const int saved_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    int wins = 0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const Graph g = generate_random(10, 0.6, true, s);
        TrainerConfig tc;
        tc.p = 3;
        tc.seed = mix_seed(66, s);
        // Each run repeats identically; take the min wall time of ten so
        // scheduler jitter does not decide the comparison. Rep 0 warms the
        // caches and is not timed.
        double t_pil = 1e300, t_std = 1e300;
        for (int rep = 0; rep < 11; ++rep) {
            const TrainReport pil = train_pil(g, tc);
            const TrainReport std_rep = train_standard(g, tc);
            if (rep == 0) {
                crit6_pil_reports.push_back(report_to_json(pil));
                continue;
            }
            t_pil = std::min(t_pil, pil.total_time);
            t_std = std::min(t_std, std_rep.total_time);
        }
        if (t_pil <= t_std) ++wins;
    }
#ifdef _OPENMP
    omp_set_num_threads(saved_threads);
#endif
    const bool ok = wins >= 7 && t.secs() < 3600.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "weighted random n=10: incremental time <= standard in %d/10 seeds (need 7)",
                  wins);
    report(6, ok, buf, t.secs());
}

// 7. Early-break soundness across 200 phases + forced-stop stub.
void criterion7() {
    Timer t;
    bool ok = true;
    int phases_seen = 0;
    for (std::uint64_t s = 0; phases_seen < 200; ++s) {
        const Graph g = generate_random(9, 0.5, s % 2 == 0, s + 101);
        TrainerConfig tc;
        tc.seed = mix_seed(700, s);
        const TrainReport r = train_pil(g, tc);
        for (const auto& ph : r.phases) {
            ++phases_seen;
            if (ph.early_broken) ok &= ph.best_cut >= ph.random_bar;
        }
    }
    const Graph g = generate_random(8, 0.5, false, 5);
    const OptimResult forced = optimize(g, random_params(3, 9), {},
                                        [](const ParamVector&) { return true; });
    ok &= forced.early_broken && forced.iterations <= 1;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "every early break over %d phases clears its bar; forced stop costs <=1 iteration",
                  phases_seen);
    report(7, ok, buf, t.secs());
}

// 8. Parameter reuse bit-exact, verified from the serialized JSON.
void criterion8() {
    Timer t;
    bool ok = true;
    int runs = 0, links = 0;
    auto check_report = [&](const nlohmann::json& run) {
        if (!run.contains("phases")) return; // failed-run stub
        ++runs;
        const auto& phases = run["phases"];
        for (std::size_t i = 1; i < phases.size(); ++i) {
            ++links;
            // string-level comparison: bit-identical doubles or nothing
            ok &= phases[i]["init_params"] == phases[i - 1]["final_params"];
        }
        ok &= run["final_params"] == phases.back()["final_params"];
    };
    for (const auto& run : crit5_detail["runs"]) check_report(run);
    for (const auto& run : crit6_pil_reports) check_report(run);
    char buf[128];
    std::snprintf(buf, sizeof buf, "parameter reuse bit-identical across %d phase links in %d runs",
                  links, runs);
    report(8, ok && runs == 70 && links > 0, buf, t.secs());
}

// 9. AR bounds everywhere + byte-identical rerun determinism.
void criterion9() {
    Timer t;
    bool ok = true;
    auto ar_in_bounds = [&](const nlohmann::json& run) {
        if (!run.contains("ar_sampled")) return;
        const double ar = run["ar_sampled"].get<double>();
        ok &= ar >= 0.0 && ar <= 1.0;
    };
    for (const auto& run : crit5_detail["runs"]) ar_in_bounds(run);
    for (const auto& run : crit6_pil_reports) ar_in_bounds(run);

    ExperimentConfig cfg;
    cfg.instances = {{"random", 8, 0.6, 0, true, 5}, {"regular", 8, 0.0, 3, false, 6}};
    cfg.repeats = 3;
    cfg.master_seed = 99;
    nlohmann::json a = run_benchmark_rows(cfg).detail;
    nlohmann::json b = run_benchmark_rows(cfg).detail;
    std::function<void(nlohmann::json&)> strip = [&](nlohmann::json& j) {
        if (j.is_object()) {
            j.erase("total_time");
            j.erase("wall_time");
            for (auto& [k, v] : j.items()) strip(v);
        } else if (j.is_array())
            for (auto& v : j) strip(v);
    };
    strip(a);
    strip(b);
    ok &= a.dump() == b.dump();
    for (const auto& run : a["runs"]) ar_in_bounds(run);
    report(9, ok, "all ARs in [0,1]; rerun reproduces byte-identical non-timing output", t.secs());
}

// 10. Dataset emission counts, degrees, seeds, and eager oracle values.
void criterion10() {
    Timer t;
    bool ok = true;
    const fs::path dir = fs::temp_directory_path() / "pilq_acceptance_dataset";
    fs::remove_all(dir);
    ok &= gen_dataset(dir.string(), {false, true}, {"regular", "random"}, 13) == 0;
    std::ifstream in(dir / "manifest.json");
    ok &= in.good();
    const nlohmann::json manifest = nlohmann::json::parse(in, nullptr, false);
    int regular_unweighted = 0, random_unweighted = 0, random_weighted = 0;
    for (const auto& entry : manifest["instances"]) {
        if (entry["status"] != "ok") {
            ok = false;
            continue;
        }
        ok &= entry.contains("seed") && entry.contains("c_star") && entry.contains("hash");
        const Graph g = read_graph(dir / entry["file"].get<std::string>());
        if (entry["family"] == "regular" && !entry["weighted"].get<bool>()) {
            ++regular_unweighted;
            for (int deg : g.degrees()) ok &= deg == entry["d"].get<int>();
        }
        if (entry["family"] == "random")
            (entry["weighted"].get<bool>() ? random_weighted : random_unweighted)++;
        ok &= cut_value(g, 0) == 0.0; // file loads and is consistent
    }
    ok &= regular_unweighted == 15 && random_unweighted == 24 && random_weighted == 24;
    // eager oracle spot check on the first regular entry
    for (const auto& entry : manifest["instances"])
        if (entry["status"] == "ok" && entry["family"] == "regular") {
            const Graph g = read_graph(dir / entry["file"].get<std::string>());
            ok &= max_cut_bruteforce(g).c_star == entry["c_star"].get<double>();
            break;
        }
    fs::remove_all(dir);
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "dataset: 15 unweighted regular (got %d), 24 random per flag (got %d/%d)",
                  regular_unweighted, random_unweighted, random_weighted);
    report(10, ok, buf, t.secs());
}

} // namespace

int main() {
    criterion6();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    for (int i = 1; i <= 10; ++i) std::printf("%s\n", lines[i].c_str());
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
