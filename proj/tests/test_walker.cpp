#include <doctest.h>

#include <algorithm>
#include <vector>

#include "graph_enum.hpp"
#include "reference_walker.hpp"
#include "tourist/generators.hpp"
#include "tourist/walker.hpp"

using namespace tourist;
using tourist::testing::connected_graphs;
using tourist::testing::random_connected_graph;
using tourist::testing::reference_walk;
using tourist::testing::reference_walk_all;

namespace {

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

void check_matches_reference(const Graph& g, int mu) {
    WalkerConfig cfg{mu, 0};
    auto got = walk_all(g, cfg);
    auto expected = reference_walk_all(g, mu);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CAPTURE(i);
        CAPTURE(mu);
        CHECK(got[i].transient == expected[i].transient);
        CHECK(got[i].attractor == expected[i].attractor);
        CHECK(got[i].stop_reason == expected[i].stop_reason);
    }
}

}  // namespace

TEST_CASE("candidate sets follow the degree rule") {
    Graph ring = ring_lattice(12, 4);
    for (int i = 0; i < 12; ++i) CHECK(candidates(ring, i).empty());

    Graph star = star_graph(5);
    CHECK(candidates(star, 0) == std::vector<int>{1, 2, 3, 4, 5});

    // Node 0 has degree 3; neighbors 1, 2 have degree 3, neighbor 3 has 4.
    Graph crafted = Graph::from_edges(11, {{0, 1},
                                           {0, 2},
                                           {0, 3},
                                           {1, 4},
                                           {1, 5},
                                           {2, 6},
                                           {2, 7},
                                           {3, 8},
                                           {3, 9},
                                           {3, 10}});
    CHECK(candidates(crafted, 0) == std::vector<int>{3});
}

TEST_CASE("single step obeys memory and the rule of minimum") {
    Graph star = star_graph(3);
    // At the center with only the current node in memory the tie breaks low.
    std::vector<int> window{0};
    CHECK(step(star, 0, window) == 1);
    // All candidates in memory -> none.
    std::vector<int> full{2, 1, 3, 0};
    CHECK_FALSE(step(star, 0, std::span<const int>(full.begin(), 3)).has_value());

    // Triangle 0-1-2 plus pendant 3 on node 2: at node 2 the clustering
    // differences are 2/3 (nodes 0, 1) and 1/3 (node 3).
    Graph lollipop = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    std::vector<int> at2{2};
    CHECK(step(lollipop, 2, at2) == 3);
}

TEST_CASE("degree-regular graphs freeze every launch") {
    Graph ring = ring_lattice(100, 6);
    auto outcomes = walk_all(ring, WalkerConfig{2, 0});
    REQUIRE(outcomes.size() == 100);
    for (const auto& o : outcomes) {
        CHECK(o.transient == 0);
        CHECK(o.attractor == 0);
        CHECK(o.stop_reason == StopReason::FrozenRegular);
    }

    // Complete graph: equal degrees, no candidates anywhere.
    std::vector<std::pair<int, int>> k5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
    for (const auto& o : walk_all(Graph::from_edges(5, k5), WalkerConfig{1, 0}))
        CHECK(o.stop_reason == StopReason::FrozenRegular);
}

TEST_CASE("star walk with memory one, outcomes frozen by hand") {
    // Star K1,3, memory 1. Every walk settles into the center<->leaf-1
    // bounce: launches at 0 and 1 start inside it (t=0), leaves 2 and 3 take
    // one move to the center before entering it (t=1).
    Graph star = star_graph(3);
    auto outcomes = walk_all(star, WalkerConfig{1, 0});
    CHECK(outcomes[0] == WalkOutcome{0, 2, StopReason::AttractorFound});
    CHECK(outcomes[1] == WalkOutcome{0, 2, StopReason::AttractorFound});
    CHECK(outcomes[2] == WalkOutcome{1, 2, StopReason::AttractorFound});
    CHECK(outcomes[3] == WalkOutcome{1, 2, StopReason::AttractorFound});
    check_matches_reference(star, 1);
}

TEST_CASE("path of three nodes, both memory regimes") {
    Graph path = path_graph(3);

    auto mu1 = walk_all(path, WalkerConfig{1, 0});
    CHECK(mu1[0] == WalkOutcome{0, 2, StopReason::AttractorFound});
    CHECK(mu1[1] == WalkOutcome{0, 2, StopReason::AttractorFound});
    CHECK(mu1[2] == WalkOutcome{1, 2, StopReason::AttractorFound});

    // With memory two every launch walks into a locally stuck position.
    auto mu2 = walk_all(path, WalkerConfig{2, 0});
    CHECK(mu2[0] == WalkOutcome{2, 0, StopReason::LocallyStuck});
    CHECK(mu2[1] == WalkOutcome{1, 0, StopReason::LocallyStuck});
    CHECK(mu2[2] == WalkOutcome{2, 0, StopReason::LocallyStuck});

    check_matches_reference(path, 1);
    check_matches_reference(path, 2);
}

TEST_CASE("locally stuck at launch is not reported as frozen") {
    // Path of five: the middle node's neighbors all share its degree, but the
    // graph is not entirely regular.
    Graph path = path_graph(5);
    WalkOutcome middle = walk(path, 2, WalkerConfig{1, 0});
    CHECK(middle == WalkOutcome{0, 0, StopReason::LocallyStuck});
}

TEST_CASE("timeout reports t = max_steps") {
    GeneratorSpec spec{GraphModel::WattsStrogatz, 50, 4, 0.5, 11};
    Graph g = watts_strogatz(spec);
    WalkerConfig cfg{2, 3};
    auto outcomes = walk_all(g, cfg);
    bool saw_timeout = false;
    for (const auto& o : outcomes) {
        if (o.stop_reason == StopReason::MaxStepsExceeded) {
            saw_timeout = true;
            CHECK(o.transient == 3);
            CHECK(o.attractor == 0);
        }
        CHECK(o.transient + o.attractor <= 3 + o.attractor);
    }
    CHECK(saw_timeout);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        auto expected = reference_walk(g, static_cast<int>(i), 2, 3);
        CHECK(outcomes[i] == expected);
    }
}

TEST_CASE("walker config validation") {
    Graph g = path_graph(4);
    CHECK_THROWS(walk(g, 0, WalkerConfig{0, 0}));
    CHECK_THROWS(walk(g, 0, WalkerConfig{2, 2}));  // max_steps < mu + 1
    CHECK_THROWS(walk(g, 7, WalkerConfig{1, 0}));
    CHECK_THROWS(walk(g, -1, WalkerConfig{1, 0}));
}

TEST_CASE("walk_all equals per-start walks and is deterministic") {
    GeneratorSpec spec{GraphModel::WattsStrogatz, 80, 6, 0.2, 3};
    Graph g = watts_strogatz(spec);
    WalkerConfig cfg{2, 0};
    auto all = walk_all(g, cfg);
    WalkContext ctx(g);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i] == walk(ctx, static_cast<int>(i), cfg));
    CHECK(all == walk_all(g, cfg));
}

TEST_CASE("attractors are never shorter than memory + 1") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GeneratorSpec spec{GraphModel::WattsStrogatz, 100, 6, 0.3, seed};
        Graph g = watts_strogatz(spec);
        for (int mu = 1; mu <= 5; ++mu) {
            for (const auto& o : walk_all(g, WalkerConfig{mu, 0})) {
                if (o.stop_reason == StopReason::AttractorFound) CHECK(o.attractor >= mu + 1);
                if (o.stop_reason != StopReason::AttractorFound) CHECK(o.attractor == 0);
            }
        }
    }
}

TEST_CASE("traces never revisit the memory window") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_connected_graph(30, seed);
        WalkContext ctx(g);
        for (int mu : {1, 2, 3}) {
            WalkerConfig cfg{mu, 0};
            std::vector<int> trace;
            for (int s = 0; s < g.node_count(); ++s) {
                WalkOutcome o = walk(ctx, s, cfg, &trace);
                if (o.stop_reason == StopReason::AttractorFound)
                    CHECK(static_cast<int>(trace.size()) == o.length() + 1);
                for (std::size_t t = 1; t < trace.size(); ++t) {
                    const std::size_t lo = t >= static_cast<std::size_t>(mu) ? t - mu : 0;
                    for (std::size_t w = lo; w < t; ++w) CHECK(trace[w] != trace[t]);
                }
            }
        }
    }
}

TEST_CASE("exhaustive oracle equivalence on small connected graphs") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            for (int mu : {1, 2, 3}) {
                if (mu + 1 > n) continue;  // default budget cannot fit the config
                check_matches_reference(g, mu);
            }
        }
    }
}

TEST_CASE("oracle equivalence on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_connected_graph(8, 1000 + seed);
        for (int mu : {1, 2, 3}) check_matches_reference(g, mu);
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        GeneratorSpec spec{GraphModel::WattsStrogatz, 60, 6, 0.2, 500 + seed};
        Graph g = watts_strogatz(spec);
        for (int mu = 1; mu <= 5; ++mu) check_matches_reference(g, mu);
    }
}

TEST_CASE("wide memory windows use the fallback state registry") {
    Graph g = random_connected_graph(50, 77);
    WalkerConfig wide{25, 60};
    auto got = walk_all(g, wide);
    auto expected = reference_walk_all(g, 25, 60);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
}
