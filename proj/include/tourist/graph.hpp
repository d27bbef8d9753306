#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tourist {

// Immutable simple undirected graph. Invariants enforced at construction:
// no self-loops, no duplicate edges, symmetric adjacency, neighbor lists
// sorted ascending (the sort order is what makes downstream tie-breaking
// deterministic).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Builds from an undirected edge list over nodes 0..n-1. Throws
    // std::invalid_argument on self-loops, duplicates, or bad endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return edge_count_; }
    double mean_degree() const;

    int degree(int i) const;
    const std::vector<int>& neighbors(int i) const;
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

private:
    void check_node(int i) const;

    std::vector<std::vector<int>> adj_;
    long edge_count_ = 0;
};

struct NodeMetrics {
    int degree = 0;
    double local_clustering = 0.0;
};

struct AvgPathResult {
    double value = 0.0;
    bool degenerate = false;  // single-node component
};

struct AssortativityResult {
    double value = 0.0;
    bool degenerate = false;  // zero degree variance over edge endpoints
};

struct ComponentResult {
    Graph graph;
    std::vector<int> node_map;  // new id -> original id
};

// Fraction of neighbor pairs of i that are themselves connected; 0 when
// degree(i) < 2.
double local_clustering(const Graph& g, int i);
std::vector<double> local_clustering_all(const Graph& g);

// Mean of the local coefficients (Watts-Strogatz convention).
double global_clustering(const Graph& g);

NodeMetrics node_metrics(const Graph& g, int i);

// BFS hop distances from src; -1 for unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, int src);

// Mean BFS distance over ordered pairs of distinct nodes, computed on the
// largest connected component.
AvgPathResult average_shortest_path(const Graph& g);

// Pearson correlation of degrees across edge endpoints, both orientations.
AssortativityResult assortativity(const Graph& g);

// Induced subgraph on the largest connected node set, ids relabeled densely.
// Size ties break toward the component containing the lowest node id.
ComponentResult largest_component(const Graph& g);

}  // namespace tourist
