#include <doctest.h>

#include "pilq/graph.hpp"

#include <filesystem>
#include <set>
#include <tuple>

using namespace pilq;

TEST_CASE("generate_random respects edge probability bounds and invariants") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Graph g = generate_random(10, 0.4, false, seed);
        CHECK(g.n == 10);
        CHECK_FALSE(g.weighted);
        CHECK_NOTHROW(g.validate());
        CHECK(g.edges.size() <= 45);
        for (const auto& e : g.edges) CHECK(e.w == 1.0);
    }
}

TEST_CASE("generate_random is deterministic per seed") {
    const Graph a = generate_random(12, 0.5, true, 77);
    const Graph b = generate_random(12, 0.5, true, 77);
    const Graph c = generate_random(12, 0.5, true, 78);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a != c);
}

TEST_CASE("generate_random rejects bad arguments") {
    CHECK_THROWS_AS(generate_random(0, 0.5, false, 0), ConfigError);
    CHECK_THROWS_AS(generate_random(5, 0.0, false, 0), ConfigError);
    CHECK_THROWS_AS(generate_random(5, 1.0, false, 0), ConfigError);
}

TEST_CASE("generate_regular produces d-regular graphs") {
    for (auto [n, d] : {std::pair{6, 2}, {8, 3}, {10, 4}, {5, 2}}) {
        const Graph g = generate_regular(n, d, false, 11);
        CHECK_NOTHROW(g.validate());
        for (int deg : g.degrees()) CHECK(deg == d);
        CHECK(int(g.edges.size()) == n * d / 2);
    }
}

TEST_CASE("generate_regular rejects infeasible parameters") {
    CHECK_THROWS_AS(generate_regular(5, 3, false, 0), ConfigError); // n*d odd
    CHECK_THROWS_AS(generate_regular(4, 4, false, 0), ConfigError); // d >= n
    CHECK_THROWS_AS(generate_regular(0, 2, false, 0), ConfigError);
}

TEST_CASE("generate_complete emits all pairs") {
    const Graph g = generate_complete(7, false, 0);
    CHECK(g.edges.size() == 21);
    CHECK_NOTHROW(g.validate());
    for (int deg : g.degrees()) CHECK(deg == 6);
}

TEST_CASE("weighted generators draw weights in (0, 1]") {
    for (const Graph& g : {generate_random(10, 0.6, true, 5), generate_regular(10, 4, true, 5),
                           generate_complete(8, true, 5)}) {
        CHECK(g.weighted);
        CHECK(!g.edges.empty());
        for (const auto& e : g.edges) {
            CHECK(e.w > 0.0);
            CHECK(e.w <= 1.0);
        }
    }
}

TEST_CASE("generate dispatches by family") {
    CHECK(generate({"random", 8, 0.5, 0, false, 3}) == generate_random(8, 0.5, false, 3));
    CHECK(generate({"regular", 8, 0.0, 3, true, 3}) == generate_regular(8, 3, true, 3));
    CHECK(generate({"complete", 5, 0.0, 0, false, 3}) == generate_complete(5, false, 3));
    CHECK_THROWS_AS(generate({"tree", 5, 0.0, 0, false, 3}), ConfigError);
}

TEST_CASE("induced_subgraph keeps exactly the internal edges") {
    // 5-cycle 0-1-2-3-4-0; taking {0,1,3} keeps only edge (0,1).
    const Graph c5{5, false, {{0, 1, 1}, {0, 4, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}};
    const InducedSubgraph sub = induced_subgraph(c5, {0, 1, 3});
    CHECK(sub.graph.n == 3);
    CHECK(sub.node_map == std::vector<int>{0, 1, 3});
    REQUIRE(sub.graph.edges.size() == 1);
    CHECK(sub.graph.edges[0] == Edge{0, 1, 1.0});
}

TEST_CASE("induced_subgraph relabels against the node list order") {
    const Graph k3{3, false, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}};
    const InducedSubgraph sub = induced_subgraph(k3, {2, 0});
    // new labels: 0 -> old 2, 1 -> old 0; the edge (0,2) maps to (0,1).
    REQUIRE(sub.graph.edges.size() == 1);
    CHECK(sub.graph.edges[0] == Edge{0, 1, 1.0});
    CHECK_THROWS_AS(induced_subgraph(k3, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(k3, {0, 5}), std::invalid_argument);
}

TEST_CASE("every generated subgraph edge weight matches the parent") {
    const Graph g = generate_random(10, 0.6, true, 21);
    const InducedSubgraph sub = induced_subgraph(g, {1, 3, 4, 7, 9});
    std::set<std::tuple<int, int, double>> parent;
    for (const auto& e : g.edges) parent.insert({e.u, e.v, e.w});
    for (const auto& e : sub.graph.edges) {
        int u = sub.node_map[e.u], v = sub.node_map[e.v];
        if (u > v) std::swap(u, v);
        CHECK(parent.count({u, v, e.w}) == 1);
    }
}

TEST_CASE("text round trip is bit-exact") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = generate_random(9, 0.7, true, seed);
        const Graph back = graph_from_text(graph_to_text(g));
        CHECK(back == g); // Edge operator== compares doubles exactly
    }
}

TEST_CASE("file round trip is bit-exact") {
    const auto path = std::filesystem::temp_directory_path() / "pilq_test_roundtrip.graph";
    const Graph g = generate_regular(8, 3, true, 9);
    write_graph(g, path);
    CHECK(read_graph(path) == g);
    std::filesystem::remove(path);
}

TEST_CASE("graph_from_text reports parse errors with line numbers") {
    CHECK_THROWS_AS(graph_from_text(""), ParseError);
    CHECK_THROWS_AS(graph_from_text("nodes 3 weighted 0\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 2\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 0\n0 x 1\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 0\n0 1 1\n0 1 1\n"), ParseError); // duplicate
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 0\n1 1 1\n"), ParseError);        // self loop
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 0\n0 1 0.5\n"), ParseError);      // weight != 1
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 1\n0 1 1.5\n"), ParseError);      // out of (0,1]
    CHECK_THROWS_AS(graph_from_text("n 3 weighted 0\n0 3 1\n"), ParseError);        // v >= n
}

TEST_CASE("validate enforces the documented invariants") {
    Graph g{3, false, {{0, 1, 1.0}}};
    CHECK_NOTHROW(g.validate());
    g.edges[0].w = 2.0;
    CHECK_THROWS_AS(g.validate(), ParseError);
    g = Graph{0, false, {}};
    CHECK_THROWS_AS(g.validate(), ParseError);
}

TEST_CASE("total_weight and degrees") {
    const Graph g{4, true, {{0, 1, 0.25}, {1, 2, 0.5}, {2, 3, 0.75}}};
    CHECK(g.total_weight() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
}
