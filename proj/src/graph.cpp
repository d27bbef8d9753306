#include "tourist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "tourist/parallel.hpp"

namespace tourist {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph: node count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    g.edge_count_ = static_cast<long>(edges.size());
    return g;
}

double Graph::mean_degree() const {
    if (adj_.empty()) return 0.0;
    return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adj_.size());
}

void Graph::check_node(int i) const {
    if (i < 0 || i >= node_count()) throw std::out_of_range("graph: node id out of range");
}

int Graph::degree(int i) const {
    check_node(i);
    return static_cast<int>(adj_[i].size());
}

const std::vector<int>& Graph::neighbors(int i) const {
    check_node(i);
    return adj_[i];
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

double local_clustering(const Graph& g, int i) {
    const auto& nbrs = g.neighbors(i);
    const auto k = static_cast<long>(nbrs.size());
    if (k < 2) return 0.0;
    long links = 0;
    // Count edges among neighbors by merging sorted lists pairwise.
    for (int j : nbrs) {
        const auto& other = g.neighbors(j);
        auto a = nbrs.begin();
        auto b = other.begin();
        while (a != nbrs.end() && b != other.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++links;
                ++a;
                ++b;
            }
        }
    }
    // Each neighbor-neighbor edge was seen from both sides.
    const long triangles2 = links;  // 2 * T_i
    return static_cast<double>(triangles2) / (static_cast<double>(k) * (k - 1));
}

std::vector<double> local_clustering_all(const Graph& g) {
    std::vector<double> out(static_cast<std::size_t>(g.node_count()), 0.0);
    parallel_for(g.node_count(), [&](long i) {
        out[static_cast<std::size_t>(i)] = local_clustering(g, static_cast<int>(i));
    });
    return out;
}

double global_clustering(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("global_clustering: empty graph");
    auto values = local_clustering_all(g);
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    return sum / static_cast<double>(values.size());
}

NodeMetrics node_metrics(const Graph& g, int i) {
    return NodeMetrics{g.degree(i), local_clustering(g, i)};
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
    if (g.node_count() == 0) return dist;
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

AvgPathResult average_shortest_path(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("average_shortest_path: empty graph");
    ComponentResult comp = largest_component(g);
    const int m = comp.graph.node_count();
    if (m < 2) return AvgPathResult{0.0, true};
    std::vector<long> per_source(static_cast<std::size_t>(m), 0);
    parallel_for(m, [&](long s) {
        auto dist = bfs_distances(comp.graph, static_cast<int>(s));
        long total = 0;
        for (int d : dist) total += d;  // connected component: all d >= 0
        per_source[static_cast<std::size_t>(s)] = total;
    });
    long total = std::accumulate(per_source.begin(), per_source.end(), 0L);
    double pairs = static_cast<double>(m) * (m - 1);
    return AvgPathResult{static_cast<double>(total) / pairs, false};
}

AssortativityResult assortativity(const Graph& g) {
    if (g.edge_count() < 1) throw std::invalid_argument("assortativity: graph has no edges");
    // Sums over both orientations of every edge.
    double sum_x = 0.0, sum_x2 = 0.0, sum_xy = 0.0;
    for (int u = 0; u < g.node_count(); ++u) {
        const double ku = static_cast<double>(g.degree(u));
        for (int v : g.neighbors(u)) {
            const double kv = static_cast<double>(g.degree(v));
            sum_x += ku;
            sum_x2 += ku * ku;
            sum_xy += ku * kv;
        }
    }
    const double m = 2.0 * static_cast<double>(g.edge_count());
    const double mean = sum_x / m;
    const double var = sum_x2 / m - mean * mean;
    if (var <= 1e-12 * std::max(1.0, sum_x2 / m)) return AssortativityResult{0.0, true};
    const double cov = sum_xy / m - mean * mean;
    return AssortativityResult{cov / var, false};
}

ComponentResult largest_component(const Graph& g) {
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("largest_component: empty graph");
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int components = 0;
    std::vector<int> best_nodes;
    std::vector<int> current;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        current.clear();
        current.push_back(s);
        label[s] = components;
        std::size_t head = 0;
        while (head < current.size()) {
            int u = current[head++];
            for (int v : g.neighbors(u)) {
                if (label[v] < 0) {
                    label[v] = components;
                    current.push_back(v);
                }
            }
        }
        // Strict > keeps the earliest (lowest-id) component on ties.
        if (current.size() > best_nodes.size()) best_nodes = current;
        ++components;
    }
    std::sort(best_nodes.begin(), best_nodes.end());
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < best_nodes.size(); ++i)
        old_to_new[best_nodes[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : best_nodes)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(old_to_new[u], old_to_new[v]);
    ComponentResult result;
    result.graph = Graph::from_edges(static_cast<int>(best_nodes.size()), edges);
    result.node_map = std::move(best_nodes);
    return result;
}

}  // namespace tourist
