#include "tourist/metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tourist/generators.hpp"
#include "tourist/parallel.hpp"
#include "tourist/rng.hpp"
#include "tourist/signatures.hpp"

namespace tourist {

namespace {

// Mean trajectory length over `realizations` equivalent random graphs,
// seeds derived per realization, reduced in index order.
double baseline_walk_length(const Graph& g, const WalkerConfig& cfg, int realizations,
                            std::uint64_t seed) {
    std::vector<double> means(static_cast<std::size_t>(realizations), 0.0);
    for (int r = 0; r < realizations; ++r) {
        Graph random = equivalent_random(g, Rng::derive(seed, static_cast<std::uint64_t>(r)));
        means[static_cast<std::size_t>(r)] = mean_trajectory_length(walk_all(random, cfg));
    }
    return std::accumulate(means.begin(), means.end(), 0.0) / realizations;
}

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& values) {
    if (values.empty()) return {};
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

}  // namespace

MetricsReport chi(const Graph& g, const WalkerConfig& cfg, int realizations, std::uint64_t seed) {
    if (realizations < 1) throw std::invalid_argument("chi: realizations must be >= 1");
    MetricsReport report;
    report.mu = cfg.memory;
    report.baseline_realizations = realizations;
    report.seed = seed;
    report.clustering_C = global_clustering(g);
    report.mean_walk_len = mean_trajectory_length(walk_all(g, cfg));
    report.baseline_walk_len = baseline_walk_length(g, cfg, realizations, seed);
    if (report.mean_walk_len == 0.0) {
        report.chi = 0.0;  // the walker cannot move: regular limit
    } else if (report.baseline_walk_len <= 0.0) {
        report.chi = 0.0;
        report.chi_degenerate = true;
    } else {
        report.chi = report.clustering_C * report.mean_walk_len / report.baseline_walk_len;
    }
    return report;
}

OmegaParts omega_parts(const Graph& g, int realizations, std::uint64_t seed) {
    if (realizations < 1) throw std::invalid_argument("omega: realizations must be >= 1");
    OmegaParts parts;
    parts.C = global_clustering(g);
    AvgPathResult path = average_shortest_path(g);
    parts.L = path.value;
    std::vector<double> lengths(static_cast<std::size_t>(realizations), 0.0);
    for (int r = 0; r < realizations; ++r) {
        Graph random = equivalent_random(g, Rng::derive(seed, static_cast<std::uint64_t>(r)));
        lengths[static_cast<std::size_t>(r)] = average_shortest_path(random).value;
    }
    parts.L_random =
        std::accumulate(lengths.begin(), lengths.end(), 0.0) / static_cast<double>(realizations);
    parts.C_lattice = global_clustering(equivalent_lattice(g));
    if (parts.L <= 0.0 || parts.C_lattice <= 0.0)
        throw std::domain_error("omega: degenerate input (L or C_lattice is zero)");
    parts.value = parts.L_random / parts.L - parts.C / parts.C_lattice;
    return parts;
}

double omega(const Graph& g, int realizations, std::uint64_t seed) {
    return omega_parts(g, realizations, seed).value;
}

MetricsReport full_report(const Graph& g, const WalkerConfig& cfg, int realizations,
                          std::uint64_t seed) {
    MetricsReport report = chi(g, cfg, realizations, seed);
    AvgPathResult path = average_shortest_path(g);
    report.avg_path_L = path.value;
    report.path_degenerate = path.degenerate;
    try {
        OmegaParts parts = omega_parts(g, realizations, seed);
        report.omega = parts.value;
        report.baseline_L_random = parts.L_random;
        report.baseline_C_lattice = parts.C_lattice;
    } catch (const std::exception&) {
        report.omega = std::nan("");
        report.omega_degenerate = true;
    }
    return report;
}

const std::array<const char*, StructuralFeatures::width>& StructuralFeatures::names() {
    static const std::array<const char*, width> n = {
        "degree_mean",     "degree_std",           "clustering_mean", "clustering_std",
        "path_mean",       "path_std",             "assortativity",   "assortativity_degenerate"};
    return n;
}

StructuralFeatures structural_features(const Graph& g) {
    StructuralFeatures f;
    std::vector<double> degrees(static_cast<std::size_t>(g.node_count()));
    for (int i = 0; i < g.node_count(); ++i) degrees[i] = static_cast<double>(g.degree(i));
    MeanStd deg = mean_std(degrees);
    MeanStd clu = mean_std(local_clustering_all(g));

    // Per-node mean BFS distance, on the largest component.
    ComponentResult comp = largest_component(g);
    const int m = comp.graph.node_count();
    std::vector<double> per_node(static_cast<std::size_t>(m), 0.0);
    if (m > 1) {
        parallel_for(m, [&](long s) {
            auto dist = bfs_distances(comp.graph, static_cast<int>(s));
            long total = 0;
            for (int d : dist) total += d;
            per_node[static_cast<std::size_t>(s)] =
                static_cast<double>(total) / static_cast<double>(m - 1);
        });
    }
    MeanStd path = mean_std(per_node);

    AssortativityResult assort =
        g.edge_count() >= 1 ? assortativity(g) : AssortativityResult{0.0, true};

    f.values = {deg.mean, deg.std, clu.mean, clu.std,
                path.mean, path.std, assort.value, assort.degenerate ? 1.0 : 0.0};
    return f;
}

}  // namespace tourist
