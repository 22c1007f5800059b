#include "pilq/graph.hpp"
#include "pilq/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pilq {

double Graph::total_weight() const {
    double s = 0.0;
    for (const auto& e : edges) s += e.w;
    return s;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

void Graph::validate() const {
    if (n < 1) throw ParseError("graph: node count must be >= 1");
    const Edge* prev = nullptr;
    for (const auto& e : edges) {
        if (e.u < 0 || e.v >= n || e.u >= e.v)
            throw ParseError("graph: edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") violates 0 <= u < v < n");
        if (prev && prev->u == e.u && prev->v == e.v)
            throw ParseError("graph: duplicate edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        if (!weighted && e.w != 1.0)
            throw ParseError("graph: unweighted graph with weight != 1");
        if (weighted && !(e.w > 0.0 && e.w <= 1.0))
            throw ParseError("graph: weight out of (0,1]");
        prev = &e;
    }
}

std::uint64_t Graph::hash() const {
    const std::string text = graph_to_text(*this);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

void sort_edges(Graph& g) {
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
}

double draw_weight(bool weighted, Rng& rng) {
    return weighted ? rng.uniform_open01() : 1.0;
}

} // namespace

Graph generate_random(int n, double ep, bool weighted, std::uint64_t seed) {
    if (n < 1) throw ConfigError("generate_random: n must be >= 1");
    if (!(ep > 0.0 && ep < 1.0)) throw ConfigError("generate_random: ep must be in (0,1)");
    Rng rng(seed);
    Graph g{n, weighted, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(ep)) g.edges.push_back({u, v, draw_weight(weighted, rng)});
    return g;
}

Graph generate_regular(int n, int d, bool weighted, std::uint64_t seed) {
    if (n < 1 || d < 1) throw ConfigError("generate_regular: n and d must be >= 1");
    if (d >= n) throw ConfigError("generate_regular: d must be < n");
    if ((std::int64_t(n) * d) % 2 != 0) throw ConfigError("generate_regular: n*d must be even");

    // Configuration model: n*d stubs, shuffled, paired consecutively.
    // Pairings with loops or multi-edges are rejected wholesale.
    Rng rng(seed);
    constexpr int kMaxRetries = 1000;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(size_t(n) * d);
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < d; ++j) stubs.push_back(v);
        for (size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);

        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(stubs.size() / 2);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            if (u > v) std::swap(u, v);
            pairs.emplace_back(u, v);
        }
        if (!ok) continue;
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;

        Graph g{n, weighted, {}};
        g.edges.reserve(pairs.size());
        for (const auto& [u, v] : pairs) g.edges.push_back({u, v, draw_weight(weighted, rng)});
        return g;
    }
    throw std::runtime_error("generate_regular: pairing rejection exceeded retry cap");
}

Graph generate_complete(int n, bool weighted, std::uint64_t seed) {
    if (n < 2) throw ConfigError("generate_complete: n must be >= 2");
    Rng rng(seed);
    Graph g{n, weighted, {}};
    g.edges.reserve(size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, draw_weight(weighted, rng)});
    return g;
}

Graph generate(const DatasetSpec& spec) {
    if (spec.family == "random") return generate_random(spec.n, spec.ep, spec.weighted, spec.seed);
    if (spec.family == "regular") return generate_regular(spec.n, spec.d, spec.weighted, spec.seed);
    if (spec.family == "complete") return generate_complete(spec.n, spec.weighted, spec.seed);
    throw ConfigError("unknown graph family: " + spec.family);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
    std::vector<int> to_new(g.n, -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        int v = nodes[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: node out of range");
        if (to_new[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate node");
        to_new[v] = int(i);
    }
    Graph sub{int(nodes.size()), g.weighted, {}};
    for (const auto& e : g.edges) {
        int a = to_new[e.u], b = to_new[e.v];
        if (a < 0 || b < 0) continue;
        if (a > b) std::swap(a, b);
        sub.edges.push_back({a, b, e.w});
    }
    sort_edges(sub);
    return {std::move(sub), nodes};
}

std::string graph_to_text(const Graph& g) {
    std::string out = "n " + std::to_string(g.n) + " weighted " + (g.weighted ? "1" : "0") + "\n";
    char buf[64];
    for (const auto& e : g.edges) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.w);
        out += buf;
    }
    return out;
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Graph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw_n, kw_w;
            int wflag = -1;
            if (!(ls >> kw_n >> g.n >> kw_w >> wflag) || kw_n != "n" || kw_w != "weighted" ||
                (wflag != 0 && wflag != 1))
                throw ParseError("line " + std::to_string(lineno) + ": bad header");
            g.weighted = wflag == 1;
            have_header = true;
            continue;
        }
        Edge e{};
        if (!(ls >> e.u >> e.v >> e.w))
            throw ParseError("line " + std::to_string(lineno) + ": bad edge line");
        g.edges.push_back(e);
    }
    if (!have_header) throw ParseError("line 1: missing header");
    sort_edges(g);
    try {
        g.validate();
    } catch (const ParseError& err) {
        throw ParseError(std::string("invalid graph: ") + err.what());
    }
    return g;
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path.string());
    out << graph_to_text(g);
}

Graph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for read: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_text(buf.str());
}

} // namespace pilq
