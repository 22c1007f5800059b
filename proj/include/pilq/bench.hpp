#pragma once

#include "pilq/graph.hpp"
#include "pilq/trainer.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pilq {

// Instance id in the dataset's naming scheme, e.g. "u-Reg2_6",
// "w-Ran0.4_8", "u-Com_5".
std::string instance_id(const DatasetSpec& spec);

struct ExperimentConfig {
    std::vector<DatasetSpec> instances;
    std::vector<std::string> methods{"pil", "standard"};
    int p = 3;
    int repeats = 10;
    TrainerConfig trainer;
    std::vector<int> p_list{1, 2, 3, 4, 5};
    std::vector<int> forgetting_sizes{6, 8, 10};
    int forgetting_old_size = 4;
    std::uint64_t master_seed = 0;
    std::string out_dir = "out";
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

// c_a / c_star; zero-optimum instances report 1.0 by convention.
double approximation_ratio(double c_a, double c_star);
struct ArValue {
    double ar;
    bool zero_optimum;
};
ArValue approximation_ratio_flagged(double c_a, double c_star);

struct MetricsRow {
    std::string instance;
    std::string family;
    int n = 0;
    std::string ep_or_d;
    bool weighted = false;
    std::string method;
    int p = 0;
    double ar_max = 0.0;
    double ar_avg = 0.0;
    double time_avg_s = 0.0;
    std::string flags;
};

std::string metrics_csv_header();
std::string metrics_csv_line(const MetricsRow& row);

struct BenchOutput {
    std::vector<MetricsRow> rows;
    nlohmann::json detail;
    int failures = 0;
};

// One row per instance x method, `repeats` seeded runs each; runs fan out
// across a worker pool and are assembled in index order, so everything
// except the timing column is deterministic per (config, master seed).
BenchOutput run_benchmark_rows(const ExperimentConfig& cfg);
int run_benchmark(const ExperimentConfig& cfg); // writes summary.csv + detail.json

int run_p_sweep(const ExperimentConfig& cfg); // writes p_sweep.csv + detail

// Trains on grown versions of a small old graph and re-evaluates the new
// parameters on the old graph.
int run_forgetting(const ExperimentConfig& cfg); // writes forgetting.csv + detail

// Table-driven dataset emission: graph files plus a manifest carrying
// spec, seed, hash, and the eagerly computed oracle value per instance.
int gen_dataset(const std::string& out_dir, const std::vector<bool>& weighted_flags,
                const std::vector<std::string>& families, std::uint64_t master_seed);

// The Table-3 parameter grid for one weighted flag.
std::vector<DatasetSpec> dataset_grid(bool weighted, const std::vector<std::string>& families,
                                      std::uint64_t master_seed);

} // namespace pilq
