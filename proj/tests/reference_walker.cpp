#include "reference_walker.hpp"

#include <cmath>
#include <cstdlib>

namespace tourist::testing {

namespace {

struct DenseView {
    int n = 0;
    std::vector<std::vector<bool>> adj;
    std::vector<int> degree;
    std::vector<double> clustering;
    bool frozen = true;

    explicit DenseView(const Graph& g) : n(g.node_count()) {
        adj.assign(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j : g.neighbors(i)) adj[i][j] = true;
        degree.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[i][j]) ++degree[i];
        clustering.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            if (degree[i] < 2) continue;
            int triangles = 0;
            for (int a = 0; a < n; ++a) {
                if (!adj[i][a]) continue;
                for (int b = a + 1; b < n; ++b)
                    if (adj[i][b] && adj[a][b]) ++triangles;
            }
            clustering[i] = 2.0 * triangles / (static_cast<double>(degree[i]) * (degree[i] - 1));
        }
        for (int i = 0; i < n && frozen; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[i][j] && degree[j] != degree[i]) {
                    frozen = false;
                    break;
                }
    }

    std::vector<int> window_of(const std::vector<int>& visited, int memory) const {
        const int len = std::min<int>(memory, static_cast<int>(visited.size()));
        return {visited.end() - len, visited.end()};
    }
};

}  // namespace

WalkOutcome reference_walk(const Graph& g, int start, int memory, int max_steps) {
    DenseView view(g);
    if (max_steps <= 0) max_steps = view.n;
    if (view.frozen) return WalkOutcome{0, 0, StopReason::FrozenRegular};

    std::vector<int> visited{start};
    std::vector<std::vector<int>> history;  // state after m moves, index m
    history.push_back(view.window_of(visited, memory));

    int current = start;
    int moves = 0;
    for (;;) {
        const std::vector<int> window = view.window_of(visited, memory);
        int next = -1;
        double best = 0.0;
        for (int j = 0; j < view.n; ++j) {
            if (!view.adj[current][j]) continue;
            if (view.degree[j] == view.degree[current]) continue;  // first rule
            bool in_memory = false;
            for (int w : window)
                if (w == j) in_memory = true;
            if (in_memory) continue;
            const double diff = std::abs(view.clustering[current] - view.clustering[j]);
            if (next < 0 || diff < best) {  // second rule, lowest id on ties
                next = j;
                best = diff;
            }
        }
        if (next < 0) return WalkOutcome{moves, 0, StopReason::LocallyStuck};
        if (moves == max_steps) return WalkOutcome{max_steps, 0, StopReason::MaxStepsExceeded};
        current = next;
        visited.push_back(current);
        ++moves;
        const std::vector<int> state = view.window_of(visited, memory);
        for (int m = 0; m < static_cast<int>(history.size()); ++m)
            if (history[m] == state)
                return WalkOutcome{m, moves - m, StopReason::AttractorFound};
        history.push_back(state);
    }
}

std::vector<WalkOutcome> reference_walk_all(const Graph& g, int memory, int max_steps) {
    std::vector<WalkOutcome> out;
    out.reserve(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) out.push_back(reference_walk(g, i, memory, max_steps));
    return out;
}

}  // namespace tourist::testing
