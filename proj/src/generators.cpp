#include "tourist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "tourist/rng.hpp"

namespace tourist {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

const char* to_string(GraphModel model) {
    switch (model) {
        case GraphModel::Regular: return "regular";
        case GraphModel::WattsStrogatz: return "watts_strogatz";
        case GraphModel::ErdosRenyi: return "erdos_renyi";
    }
    return "unknown";
}

GraphModel model_from_string(const std::string& name) {
    if (name == "regular") return GraphModel::Regular;
    if (name == "watts_strogatz") return GraphModel::WattsStrogatz;
    if (name == "erdos_renyi") return GraphModel::ErdosRenyi;
    throw std::invalid_argument("unknown graph model: " + name);
}

void GeneratorSpec::validate() const {
    if (n <= 0) throw std::invalid_argument("generator: n must be positive");
    if (mean_degree <= 0 || mean_degree % 2 != 0)
        throw std::invalid_argument("generator: mean degree must be a positive even integer");
    if (mean_degree >= n)
        throw std::invalid_argument("generator: mean degree must be smaller than n");
    if (rewiring_p < 0.0 || rewiring_p > 1.0)
        throw std::invalid_argument("generator: rewiring probability must lie in [0, 1]");
}

Graph ring_lattice(int n, int k) {
    if (n <= 0) throw std::invalid_argument("ring_lattice: n must be positive");
    if (k <= 0 || k % 2 != 0) throw std::invalid_argument("ring_lattice: k must be a positive even integer");
    if (k >= n) throw std::invalid_argument("ring_lattice: k must be smaller than n");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (k / 2));
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= k / 2; ++d)
            edges.emplace_back(i, (i + d) % n);
    return Graph::from_edges(n, edges);
}

Graph watts_strogatz(const GeneratorSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const int k = spec.mean_degree;
    Rng rng(spec.seed);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= k / 2; ++d) {
            int j = (i + d) % n;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    auto connected = [&](int u, int v) {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    };
    auto drop = [&](std::vector<int>& list, int value) {
        list.erase(std::find(list.begin(), list.end(), value));
    };

    // Scan lattice edges by near endpoint; rewiring replaces the far one.
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= k / 2; ++d) {
            if (rng.next_double() >= spec.rewiring_p) continue;
            if (static_cast<int>(adj[i].size()) >= n - 1) continue;  // no free slot to rewire into
            const int old_far = (i + d) % n;
            int target;
            do {
                target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            } while (target == i || connected(i, target));
            drop(adj[i], old_far);
            drop(adj[old_far], i);
            adj[i].push_back(target);
            adj[target].push_back(i);
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (k / 2));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph erdos_renyi(int n, double p_conn, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("erdos_renyi: n must be positive");
    if (p_conn < 0.0 || p_conn > 1.0)
        throw std::invalid_argument("erdos_renyi: connection probability must lie in [0, 1]");
    std::vector<std::pair<int, int>> edges;
    if (p_conn > 0.0) {
        Rng rng(seed);
        const long long total = static_cast<long long>(n) * (n - 1) / 2;
        const double log1mp = std::log1p(-p_conn);  // -inf when p == 1
        long long idx = -1;
        // Walk (row, offset) forward as the linear pair index advances.
        long long row = 0;
        long long row_start = 0;
        long long row_len = n - 1;
        while (true) {
            long long skip = 0;
            if (p_conn < 1.0) {
                const double u = rng.next_double();
                const double r = std::floor(std::log1p(-u) / log1mp);
                if (r >= static_cast<double>(total)) break;  // beyond the last pair
                skip = static_cast<long long>(r);
            }
            idx += 1 + skip;
            if (idx >= total) break;
            while (idx >= row_start + row_len) {
                row_start += row_len;
                ++row;
                row_len = n - 1 - row;
            }
            const int u = static_cast<int>(row);
            const int v = static_cast<int>(row + 1 + (idx - row_start));
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
    spec.validate();
    switch (spec.model) {
        case GraphModel::Regular:
            return ring_lattice(spec.n, spec.mean_degree);
        case GraphModel::WattsStrogatz:
            return watts_strogatz(spec);
        case GraphModel::ErdosRenyi:
            return erdos_renyi(spec.n, static_cast<double>(spec.mean_degree) / (spec.n - 1),
                               spec.seed);
    }
    throw std::logic_error("generate: unhandled model");
}

Graph equivalent_random(const Graph& g, std::uint64_t seed) {
    const int n = g.node_count();
    if (n <= 1) return Graph(n);
    const double p = g.mean_degree() / static_cast<double>(n - 1);
    return erdos_renyi(n, std::min(1.0, p), seed);
}

int equivalent_lattice_degree(const Graph& g) {
    const double mean = g.mean_degree();
    if (mean < 1.0) throw std::invalid_argument("equivalent_lattice: mean degree below 1");
    // Nearest even integer; exact ties (odd integer means) round up.
    int k = 2 * static_cast<int>(std::floor(mean / 2.0 + 0.5));
    k = std::max(k, 2);
    int max_even = (g.node_count() - 1) % 2 == 0 ? g.node_count() - 1 : g.node_count() - 2;
    return std::min(k, max_even);
}

Graph equivalent_lattice(const Graph& g) {
    return ring_lattice(g.node_count(), equivalent_lattice_degree(g));
}

Graph apply_noise(const Graph& g, const NoiseSpec& spec, NoiseStats* stats) {
    if (spec.rate < 0.0 || spec.rate > 1.0)
        throw std::invalid_argument("apply_noise: rate must lie in [0, 1]");
    const int n = g.node_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) present.insert(edge_key(u, v));

    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    NoiseStats local;
    local.operations = std::llround(spec.rate * static_cast<double>(g.edge_count()));
    Rng rng(spec.seed);
    for (long op = 0; op < local.operations; ++op) {
        const bool remove = rng.next_double() < 0.5;
        if (remove) {
            if (edges.empty()) {
                ++local.skipped;
                continue;
            }
            const auto idx = static_cast<std::size_t>(rng.next_below(edges.size()));
            present.erase(edge_key(edges[idx].first, edges[idx].second));
            edges[idx] = edges.back();
            edges.pop_back();
            ++local.removed;
        } else {
            if (static_cast<long long>(edges.size()) >= max_edges) {
                ++local.skipped;
                continue;
            }
            int u, v;
            do {
                u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            } while (u == v || present.contains(edge_key(u, v)));
            present.insert(edge_key(u, v));
            edges.emplace_back(std::min(u, v), std::max(u, v));
            ++local.added;
        }
    }
    if (stats) *stats = local;
    return Graph::from_edges(n, edges);
}

}  // namespace tourist
