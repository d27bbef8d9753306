#pragma once

#include <cstdint>
#include <string>

#include "tourist/graph.hpp"

namespace tourist {

enum class GraphModel { Regular, WattsStrogatz, ErdosRenyi };

const char* to_string(GraphModel model);
GraphModel model_from_string(const std::string& name);

struct GeneratorSpec {
    GraphModel model = GraphModel::Regular;
    int n = 0;
    int mean_degree = 0;          // even, < n
    double rewiring_p = 0.0;      // Watts-Strogatz only
    std::uint64_t seed = 0;

    void validate() const;
};

struct NoiseSpec {
    double rate = 0.0;  // fraction of |E| turned into add/remove operations
    std::uint64_t seed = 0;
};

struct NoiseStats {
    long operations = 0;
    long added = 0;
    long removed = 0;
    long skipped = 0;  // removal on empty edge set / addition on complete graph
};

// Node i adjacent to i+-1 .. i+-k/2 (mod n); every degree exactly k.
Graph ring_lattice(int n, int k);

// Starts from ring_lattice(n, k); each lattice edge's far endpoint is moved
// to a uniformly random node with probability p, redrawing on self-loops and
// duplicates. |E| = n*k/2 for every p.
Graph watts_strogatz(const GeneratorSpec& spec);

// Each of the C(n,2) possible edges included independently with probability
// p_conn (geometric edge skipping, O(n + |E|)).
Graph erdos_renyi(int n, double p_conn, std::uint64_t seed);

Graph generate(const GeneratorSpec& spec);

// Erdos-Renyi graph with the same N and p = <k>/(N-1).
Graph equivalent_random(const Graph& g, std::uint64_t seed);

// Ring lattice with k' = nearest even integer to <k> (exact ties round up),
// clamped to [2, largest valid even degree].
Graph equivalent_lattice(const Graph& g);
int equivalent_lattice_degree(const Graph& g);

// round(rate * |E|) operations, each a coin flip between removing a uniform
// existing edge and adding a uniform absent one. Result stays simple.
Graph apply_noise(const Graph& g, const NoiseSpec& spec, NoiseStats* stats = nullptr);

}  // namespace tourist
