#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace pilq {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u;
    int v;
    double w;
    bool operator==(const Edge&) const = default;
};

// Weighted undirected graph. Nodes are 0..n-1; edges are stored with
// u < v, sorted, no self-loops, no duplicates. Unweighted graphs carry
// weight 1.0 on every edge.
struct Graph {
    int n = 0;
    bool weighted = false;
    std::vector<Edge> edges;

    bool operator==(const Graph&) const = default;

    double total_weight() const;
    std::vector<int> degrees() const;

    // Throws ParseError if an invariant is violated.
    void validate() const;

    // FNV-1a over the canonical text serialization.
    std::uint64_t hash() const;
};

struct DatasetSpec {
    std::string family; // "random" | "regular" | "complete"
    int n = 0;
    double ep = 0.0; // random only
    int d = 0;       // regular only
    bool weighted = false;
    std::uint64_t seed = 0;
};

Graph generate_random(int n, double ep, bool weighted, std::uint64_t seed);
Graph generate_regular(int n, int d, bool weighted, std::uint64_t seed);
Graph generate_complete(int n, bool weighted, std::uint64_t seed);
Graph generate(const DatasetSpec& spec);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> node_map; // node_map[new label] = original label
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& nodes);

// Line-oriented text format: header "n <count> weighted <0|1>", then one
// "u v w" line per edge. Weights printed with 17 significant digits so
// the round trip is bit-exact.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
void write_graph(const Graph& g, const std::filesystem::path& path);
Graph read_graph(const std::filesystem::path& path);

} // namespace pilq
