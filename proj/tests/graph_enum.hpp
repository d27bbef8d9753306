#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "tourist/graph.hpp"
#include "tourist/generators.hpp"
#include "tourist/rng.hpp"

namespace tourist::testing {

inline bool edges_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) parent[find(u)] = find(v);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// Every labeled connected graph on n nodes (edge-mask enumeration; intended
// for n <= 6).
inline std::vector<Graph> connected_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    const std::uint32_t masks = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (1u << b)) edges.push_back(pairs[b]);
        if (!edges_connected(n, edges)) continue;
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

inline Graph random_connected_graph(int n, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(Rng::derive(seed, attempt));
        const double p = 0.25 + 0.5 * rng.next_double();
        Graph g = erdos_renyi(n, p, Rng::derive(seed, attempt + 1000));
        if (edges_connected(n, g.edges())) return g;
    }
}

}  // namespace tourist::testing
