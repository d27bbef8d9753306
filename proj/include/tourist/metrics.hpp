#pragma once

#include <array>
#include <cstdint>

#include "tourist/graph.hpp"
#include "tourist/walker.hpp"

namespace tourist {

struct MetricsReport {
    double clustering_C = 0.0;
    double avg_path_L = 0.0;
    double mean_walk_len = 0.0;        // mean trajectory length on the graph
    double baseline_walk_len = 0.0;    // same, averaged over random baselines
    double baseline_L_random = 0.0;
    double baseline_C_lattice = 0.0;
    double chi = 0.0;
    double omega = 0.0;
    int mu = 0;
    int baseline_realizations = 0;
    std::uint64_t seed = 0;
    bool chi_degenerate = false;    // all random baselines frozen
    bool omega_degenerate = false;  // L or C_lattice unusable
    bool path_degenerate = false;   // largest component is a single node
};

// chi = C * mean_len / baseline_len; zero for graphs the walker cannot move
// on. Baselines are equivalent random graphs with per-realization derived
// seeds, averaged order-independently.
MetricsReport chi(const Graph& g, const WalkerConfig& cfg, int realizations, std::uint64_t seed);

struct OmegaParts {
    double value = 0.0;
    double L = 0.0;
    double L_random = 0.0;
    double C = 0.0;
    double C_lattice = 0.0;
};

// omega = L_random/L - C/C_lattice. Throws std::domain_error when L or
// C_lattice is zero.
OmegaParts omega_parts(const Graph& g, int realizations, std::uint64_t seed);
double omega(const Graph& g, int realizations, std::uint64_t seed);

// chi and omega in one report; omega degeneracy is flagged instead of thrown.
MetricsReport full_report(const Graph& g, const WalkerConfig& cfg, int realizations,
                          std::uint64_t seed);

// The 8-element structural comparison vector: mean/std of degree, local
// clustering and per-node mean shortest path (largest component), then the
// assortativity value with its degeneracy indicator in the std slot.
struct StructuralFeatures {
    static constexpr int width = 8;
    std::array<double, width> values{};
    static const std::array<const char*, width>& names();
};

StructuralFeatures structural_features(const Graph& g);

}  // namespace tourist
