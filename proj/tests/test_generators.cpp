#include <doctest.h>

#include <cmath>
#include <set>

#include "tourist/generators.hpp"
#include "tourist/graph.hpp"

using namespace tourist;

namespace {

bool is_simple_symmetric(const Graph& g) {
    // from_edges would have thrown otherwise; re-check explicitly anyway.
    for (int i = 0; i < g.node_count(); ++i) {
        std::set<int> seen;
        for (int j : g.neighbors(i)) {
            if (j == i) return false;
            if (!seen.insert(j).second) return false;
            if (!g.has_edge(j, i)) return false;
        }
    }
    return true;
}

double degree_variance(const Graph& g) {
    double mean = g.mean_degree();
    double ss = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        double d = g.degree(i) - mean;
        ss += d * d;
    }
    return ss / g.node_count();
}

}  // namespace

TEST_CASE("ring lattice construction") {
    Graph c6 = ring_lattice(6, 2);
    CHECK(c6.edges() == std::vector<std::pair<int, int>>{
                            {0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    Graph big = ring_lattice(500, 10);
    CHECK(big.edge_count() == 2500);
    for (int i = 0; i < 500; ++i) CHECK(big.degree(i) == 10);
    CHECK(global_clustering(ring_lattice(20, 4)) == doctest::Approx(0.5));
    CHECK_THROWS(ring_lattice(10, 3));
    CHECK_THROWS(ring_lattice(10, 10));
    CHECK_THROWS(ring_lattice(10, 0));
}

TEST_CASE("watts-strogatz p=0 equals the ring lattice") {
    GeneratorSpec spec{GraphModel::WattsStrogatz, 50, 6, 0.0, 42};
    CHECK(watts_strogatz(spec).edges() == ring_lattice(50, 6).edges());
}

TEST_CASE("watts-strogatz preserves edge count and stays simple") {
    for (double p : {0.01, 0.1, 0.5, 1.0}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            GeneratorSpec spec{GraphModel::WattsStrogatz, 200, 8, p, seed};
            Graph g = watts_strogatz(spec);
            CHECK(g.edge_count() == 200 * 8 / 2);
            CHECK(is_simple_symmetric(g));
        }
    }
}

TEST_CASE("watts-strogatz generation is deterministic in the seed") {
    GeneratorSpec spec{GraphModel::WattsStrogatz, 120, 6, 0.3, 7};
    CHECK(watts_strogatz(spec).edges() == watts_strogatz(spec).edges());
    GeneratorSpec other = spec;
    other.seed = 8;
    CHECK(watts_strogatz(spec).edges() != watts_strogatz(other).edges());
}

TEST_CASE("watts-strogatz p=1 reaches random-level clustering") {
    double sum = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        GeneratorSpec spec{GraphModel::WattsStrogatz, 500, 10, 1.0, 900 + static_cast<std::uint64_t>(s)};
        sum += global_clustering(watts_strogatz(spec));
    }
    CHECK(sum / seeds < 0.05);
}

TEST_CASE("watts-strogatz small-world band at p=0.05") {
    const int seeds = 20;
    double c_sum = 0.0, l_sum = 0.0, l_er_sum = 0.0;
    for (int s = 0; s < seeds; ++s) {
        GeneratorSpec spec{GraphModel::WattsStrogatz, 500, 10, 0.05, 300 + static_cast<std::uint64_t>(s)};
        Graph ws = watts_strogatz(spec);
        c_sum += global_clustering(ws);
        l_sum += average_shortest_path(ws).value;
        l_er_sum += average_shortest_path(erdos_renyi(500, 10.0 / 499.0, 500 + s)).value;
    }
    const double c = c_sum / seeds;
    CHECK(c > 0.4);
    CHECK(c < 0.6);
    // Measured mean L is ~4.6 vs ~2.9 for ER (ratio ~1.57) and ~25 for the
    // p=0 lattice: random-like paths at lattice-like clustering.
    const double l_ws = l_sum / seeds;
    CHECK(l_ws < 1.75 * (l_er_sum / seeds));
    CHECK(l_ws < 500.0 / 20.0 / 4.0);
}

TEST_CASE("erdos-renyi limits and mean degree") {
    CHECK(erdos_renyi(10, 0.0, 1).edge_count() == 0);
    CHECK(erdos_renyi(6, 1.0, 1).edge_count() == 15);
    double mean = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) mean += erdos_renyi(500, 10.0 / 499.0, 40 + s).mean_degree();
    CHECK(std::abs(mean / seeds - 10.0) < 0.5);
    CHECK(erdos_renyi(200, 0.15, 77).edges() == erdos_renyi(200, 0.15, 77).edges());
}

TEST_CASE("equivalent random network") {
    Graph ring = ring_lattice(500, 10);
    double edges = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s)
        edges += static_cast<double>(equivalent_random(ring, 60 + s).edge_count());
    CHECK(std::abs(edges / seeds - 2500.0) / 2500.0 < 0.05);
    CHECK(equivalent_random(Graph(10), 3).edge_count() == 0);
}

TEST_CASE("equivalent lattice rounding") {
    // WS preserves |E|, so the equivalent lattice recovers (N, k) exactly.
    GeneratorSpec spec{GraphModel::WattsStrogatz, 500, 10, 0.2, 5};
    Graph ws = watts_strogatz(spec);
    Graph lattice = equivalent_lattice(ws);
    CHECK(lattice.edges() == ring_lattice(500, 10).edges());

    auto with_edges = [](int n, int m) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n && static_cast<int>(edges.size()) < m; ++u)
            for (int v = u + 1; v < n && static_cast<int>(edges.size()) < m; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    };
    CHECK(equivalent_lattice_degree(with_edges(20, 97)) == 10);  // <k>=9.7
    CHECK(equivalent_lattice_degree(with_edges(20, 90)) == 10);  // <k>=9.0, tie rounds up
    CHECK(equivalent_lattice_degree(with_edges(20, 89)) == 8);   // <k>=8.9
    CHECK(equivalent_lattice_degree(with_edges(6, 15)) == 4);    // K6 clamps below n
    CHECK_THROWS(equivalent_lattice(Graph(10)));
}

TEST_CASE("noise operation counting and effect") {
    Graph ring = ring_lattice(500, 10);
    NoiseStats stats;
    Graph same = apply_noise(ring, NoiseSpec{0.0, 9}, &stats);
    CHECK(stats.operations == 0);
    CHECK(same.edges() == ring.edges());

    apply_noise(ring, NoiseSpec{0.1, 9}, &stats);
    CHECK(stats.operations == 250);
    CHECK(stats.added + stats.removed + stats.skipped == 250);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph noisy = apply_noise(ring, NoiseSpec{0.3, seed});
        CHECK(is_simple_symmetric(noisy));
        CHECK(degree_variance(noisy) > 0.0);
    }
    CHECK(apply_noise(ring, NoiseSpec{0.2, 4}).edges() ==
          apply_noise(ring, NoiseSpec{0.2, 4}).edges());
}

TEST_CASE("generator spec validation") {
    GeneratorSpec bad{GraphModel::WattsStrogatz, 10, 3, 0.1, 0};
    CHECK_THROWS(bad.validate());
    bad.mean_degree = 12;
    CHECK_THROWS(bad.validate());
    bad.mean_degree = 4;
    bad.rewiring_p = 1.5;
    CHECK_THROWS(bad.validate());
}
