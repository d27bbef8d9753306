#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tourist/graph.hpp"

namespace tourist {

struct WalkerConfig {
    int memory = 1;     // mu >= 1, nodes the walker may not revisit (current included)
    int max_steps = 0;  // move budget; 0 means "network size"

    int effective_max_steps(int n) const { return max_steps > 0 ? max_steps : n; }
    void validate(int n) const;
};

enum class StopReason { FrozenRegular, LocallyStuck, AttractorFound, MaxStepsExceeded };

const char* to_string(StopReason reason);

struct WalkOutcome {
    int transient = 0;
    int attractor = 0;
    StopReason stop_reason = StopReason::FrozenRegular;

    int length() const { return transient + attractor; }
    bool operator==(const WalkOutcome&) const = default;
};

// Per-graph precomputation shared by every launch: degrees and clustering
// feed the two walking rules, candidate lists are the degree-filtered
// neighborhoods, frozen means no node anywhere has a candidate.
class WalkContext {
public:
    explicit WalkContext(const Graph& g);

    const Graph& graph() const { return *graph_; }
    const std::vector<double>& clustering() const { return clustering_; }
    const std::vector<int>& candidates_of(int i) const { return candidates_[i]; }
    bool frozen() const { return frozen_; }

private:
    const Graph* graph_;
    std::vector<double> clustering_;
    std::vector<std::vector<int>> candidates_;
    bool frozen_ = true;
};

// Neighbors of i whose degree differs from degree(i), ascending.
std::vector<int> candidates(const Graph& g, int i);

// One application of the walking rules from node i. memory_window holds the
// most recently visited nodes, most recent last (the current node is the last
// entry). Returns the allowed candidate minimizing |c_i - c_j|, ties to the
// lowest id; nullopt when every candidate is memory-forbidden or none exist.
std::optional<int> step(const Graph& g, int i, std::span<const int> memory_window);

WalkOutcome walk(const Graph& g, int start, const WalkerConfig& cfg);
WalkOutcome walk(const WalkContext& ctx, int start, const WalkerConfig& cfg,
                 std::vector<int>* trace = nullptr);

// One launch per node, outcome i computed from start node i.
std::vector<WalkOutcome> walk_all(const Graph& g, const WalkerConfig& cfg);

}  // namespace tourist
