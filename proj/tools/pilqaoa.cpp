#include "pilq/bench.hpp"
#include "pilq/oracle.hpp"
#include "pilq/trainer.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> method;
    std::optional<int> p;
    std::optional<int> repeats;
    std::optional<int> k;
    std::optional<int> shots;
    std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON experiment config file");
    cmd->add_option("--seed", o.seed, "master RNG seed");
    cmd->add_option("--method", o.method, "pil|standard (default: both)");
    cmd->add_option("--p", o.p, "QAOA layer count");
    cmd->add_option("--repeats", o.repeats, "repeats per instance");
    cmd->add_option("--k", o.k, "random partitions for the early-break bar");
    cmd->add_option("--shots", o.shots, "measurement samples");
    cmd->add_option("--out", o.out, "output directory");
}

pilq::ExperimentConfig load_config(const CommonOpts& o) {
    nlohmann::json j = nlohmann::json::object();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw pilq::ConfigError("cannot open config: " + o.config_path);
        j = nlohmann::json::parse(in);
    }
    pilq::ExperimentConfig cfg = pilq::config_from_json(j);
    if (o.seed) cfg.master_seed = *o.seed;
    if (o.method) cfg.methods = {*o.method};
    if (o.p) cfg.p = *o.p;
    if (o.repeats) cfg.repeats = *o.repeats;
    if (o.k) cfg.trainer.k = *o.k;
    if (o.shots) cfg.trainer.shots = *o.shots;
    if (o.out) cfg.out_dir = *o.out;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PIL QAOA MaxCut benchmark harness"};
    app.require_subcommand(1);

    CommonOpts bench_o, sweep_o, forget_o, solve_o, gen_o;

    auto* gen = app.add_subcommand("gen-dataset", "emit the graph dataset and its manifest");
    add_common(gen, gen_o);
    std::vector<std::string> gen_families;
    std::string gen_weighted = "both";
    gen->add_option("--families", gen_families, "random regular complete (default: all)");
    gen->add_option("--weighted", gen_weighted, "u|w|both");

    auto* bench = app.add_subcommand("bench", "PIL vs standard benchmark, 10-repeat protocol");
    add_common(bench, bench_o);

    auto* sweep = app.add_subcommand("p-sweep", "benchmark across a list of layer counts");
    add_common(sweep, sweep_o);

    auto* forget = app.add_subcommand("forgetting", "anti-forgetting evaluation");
    add_common(forget, forget_o);

    auto* solve = app.add_subcommand("solve", "train a single instance and print its report");
    add_common(solve, solve_o);
    std::string solve_graph;
    std::string solve_family;
    int solve_n = 0;
    double solve_ep = 0.0;
    int solve_d = 0;
    bool solve_weighted = false;
    std::uint64_t solve_gseed = 0;
    solve->add_option("--graph", solve_graph, "graph file to solve");
    solve->add_option("--family", solve_family, "generate instead: random|regular|complete");
    solve->add_option("--n", solve_n, "node count (with --family)");
    solve->add_option("--ep", solve_ep, "edge probability (random family)");
    solve->add_option("--d", solve_d, "degree (regular family)");
    solve->add_flag("--weighted", solve_weighted, "weighted graph (with --family)");
    solve->add_option("--graph-seed", solve_gseed, "generator seed (with --family)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            pilq::ExperimentConfig cfg = load_config(gen_o);
            std::vector<bool> flags;
            if (gen_weighted == "u") flags = {false};
            else if (gen_weighted == "w") flags = {true};
            else flags = {false, true};
            return pilq::gen_dataset(cfg.out_dir, flags, gen_families, cfg.master_seed);
        }
        if (*bench) return pilq::run_benchmark(load_config(bench_o));
        if (*sweep) return pilq::run_p_sweep(load_config(sweep_o));
        if (*forget) return pilq::run_forgetting(load_config(forget_o));
        if (*solve) {
            pilq::ExperimentConfig cfg = load_config(solve_o);
            pilq::Graph g;
            if (!solve_graph.empty()) {
                g = pilq::read_graph(solve_graph);
            } else if (!solve_family.empty()) {
                g = pilq::generate({solve_family, solve_n, solve_ep, solve_d, solve_weighted,
                                    solve_gseed});
            } else {
                std::cerr << "solve: need --graph or --family\n";
                return 2;
            }
            pilq::TrainerConfig tc = cfg.trainer;
            tc.p = cfg.p;
            tc.seed = cfg.master_seed;
            const std::string method = cfg.methods.size() == 1 ? cfg.methods[0] : "pil";
            const pilq::TrainReport rep =
                method == "standard" ? pilq::train_standard(g, tc) : pilq::train_pil(g, tc);
            std::cout << pilq::report_to_json(rep).dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
