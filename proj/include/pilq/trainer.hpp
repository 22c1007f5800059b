#pragma once

#include "pilq/graph.hpp"
#include "pilq/qaoa.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pilq {

struct TrainerConfig {
    int p = 3;
    int base_size = 4;
    int k = 20;          // random partitions per early-break bar
    int shots = 1024;    // measurement samples for C_A and C'(z)
    int phase_stride = 1;
    bool early_break_use_expectation = false; // C'(z) = <C> instead of best sample
    OptimizerSettings opt;
    std::uint64_t seed = 0;
};

// The chain of induced subgraphs trained one after another: phase t covers
// the first base_size + t*stride nodes of node_order.
struct PhaseSchedule {
    Graph target;
    std::vector<int> node_order;
    int base_size = 4;
    int stride = 1;

    int num_phases() const;
    std::vector<int> phase_nodes(int t) const;
};

PhaseSchedule build_schedule(const Graph& g, int base_size, std::uint64_t seed, int stride = 1);

struct EarlyBreakDecision {
    bool stop;
    double best_cut;
    double random_bar;
};

// stop iff the cut reachable from the current parameters is >= the best
// of k random partitions (exact >=, no epsilon).
EarlyBreakDecision early_break_check(const Graph& phase_graph, const ParamVector& params, int k,
                                     int m, std::uint64_t seed);

struct PhaseResult {
    int phase_index = 0;
    int n = 0;
    std::uint64_t graph_hash = 0;
    ParamVector init_params;
    ParamVector final_params;
    double objective = 0.0;
    double best_cut = 0.0;
    double random_bar = 0.0;
    bool early_broken = false;
    int iterations = 0;
    int evals = 0;
    double wall_time = 0.0;
};

struct TrainReport {
    std::string method;
    std::vector<int> node_order;
    int base_size = 0;
    std::vector<PhaseResult> phases;
    ParamVector final_params;
    double c_a = 0.0;
    std::string witness; // bitstring in target node labels
    double c_star = 0.0;
    double objective = 0.0;      // final-phase <C>
    double ar_sampled = 0.0;     // c_a / c_star
    double ar_expectation = 0.0; // objective / c_star
    bool zero_optimum = false;   // c_star == 0, AR fixed to 1 by convention
    double total_time = 0.0;     // schedule selection through final optimization
};

TrainReport train_pil(const Graph& g, const TrainerConfig& cfg);
TrainReport train_standard(const Graph& g, const TrainerConfig& cfg);

nlohmann::json report_to_json(const TrainReport& r);

// Bit-exact double <-> string round trip for the JSON detail files.
std::string double_to_exact(double v);
double exact_to_double(const std::string& s);
nlohmann::json params_to_json(const ParamVector& pv);
ParamVector params_from_json(const nlohmann::json& j);

} // namespace pilq
