#include "tourist/walker.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "tourist/parallel.hpp"

namespace tourist {

namespace {

// Registry of visited walker states. A state is the memory window (oldest
// first, current node last); the walk is a deterministic map on these states,
// so the first repeat identifies the attractor cycle exactly. Windows pack
// into a 128-bit key when mu * bit_width(n) allows, which covers every
// practical configuration; wider windows fall back to an ordered map.
class StateRegistry {
public:
    StateRegistry(int n, int mu)
        : pad_(static_cast<unsigned>(n)),
          bits_(std::bit_width(static_cast<unsigned>(n))),
          mu_(mu),
          packed_(static_cast<long>(mu) * bits_ <= 128) {
        if (packed_) fast_.reserve(16);
    }

    // Returns the index of a previous occurrence, or records this one.
    std::optional<int> find_or_insert(const std::vector<int>& window, int index) {
        if (packed_) {
            auto [it, inserted] = fast_.try_emplace(pack(window), index);
            if (!inserted) return it->second;
            return std::nullopt;
        }
        auto [it, inserted] = slow_.try_emplace(window, index);
        if (!inserted) return it->second;
        return std::nullopt;
    }

private:
    struct KeyHash {
        std::size_t operator()(unsigned __int128 key) const {
            auto lo = static_cast<std::uint64_t>(key);
            auto hi = static_cast<std::uint64_t>(key >> 64);
            std::uint64_t z = lo ^ (hi * 0x9E3779B97F4A7C15ULL);
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return static_cast<std::size_t>(z ^ (z >> 31));
        }
    };

    unsigned __int128 pack(const std::vector<int>& window) const {
        unsigned __int128 key = 0;
        for (int i = 0; i < mu_; ++i) {
            const unsigned value =
                i < static_cast<int>(window.size()) ? static_cast<unsigned>(window[i]) : pad_;
            key = (key << bits_) | value;
        }
        return key;
    }

    unsigned pad_;
    int bits_;
    int mu_;
    bool packed_;
    std::unordered_map<unsigned __int128, int, KeyHash> fast_;
    std::map<std::vector<int>, int> slow_;
};

}  // namespace

void WalkerConfig::validate(int n) const {
    if (memory < 1) throw std::invalid_argument("walker: memory must be >= 1");
    if (effective_max_steps(n) < memory + 1)
        throw std::invalid_argument("walker: max_steps must be >= memory + 1");
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::FrozenRegular: return "frozen_regular";
        case StopReason::LocallyStuck: return "locally_stuck";
        case StopReason::AttractorFound: return "attractor_found";
        case StopReason::MaxStepsExceeded: return "max_steps_exceeded";
    }
    return "unknown";
}

WalkContext::WalkContext(const Graph& g)
    : graph_(&g), clustering_(local_clustering_all(g)) {
    const int n = g.node_count();
    candidates_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int ki = g.degree(i);
        for (int j : g.neighbors(i))
            if (g.degree(j) != ki) candidates_[i].push_back(j);
        if (!candidates_[i].empty()) frozen_ = false;
    }
}

std::vector<int> candidates(const Graph& g, int i) {
    std::vector<int> out;
    const int ki = g.degree(i);
    for (int j : g.neighbors(i))
        if (g.degree(j) != ki) out.push_back(j);
    return out;
}

std::optional<int> step(const Graph& g, int i, std::span<const int> memory_window) {
    const double ci = local_clustering(g, i);
    int best = -1;
    double best_diff = std::numeric_limits<double>::infinity();
    for (int j : candidates(g, i)) {
        bool forbidden = false;
        for (int w : memory_window)
            if (w == j) {
                forbidden = true;
                break;
            }
        if (forbidden) continue;
        const double diff = std::abs(ci - local_clustering(g, j));
        if (diff < best_diff) {
            best_diff = diff;
            best = j;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

WalkOutcome walk(const WalkContext& ctx, int start, const WalkerConfig& cfg,
                 std::vector<int>* trace) {
    const Graph& g = ctx.graph();
    const int n = g.node_count();
    if (start < 0 || start >= n) throw std::out_of_range("walk: start node out of range");
    cfg.validate(n);
    if (trace) {
        trace->clear();
        trace->push_back(start);
    }
    if (ctx.frozen()) return WalkOutcome{0, 0, StopReason::FrozenRegular};

    const int mu = cfg.memory;
    const int max_steps = cfg.effective_max_steps(n);
    const auto& clustering = ctx.clustering();

    std::vector<int> window;
    window.reserve(static_cast<std::size_t>(mu));
    window.push_back(start);
    StateRegistry seen(n, mu);
    seen.find_or_insert(window, 0);

    int current = start;
    int moves = 0;
    for (;;) {
        const double ci = clustering[current];
        int next = -1;
        double best_diff = std::numeric_limits<double>::infinity();
        for (int j : ctx.candidates_of(current)) {
            bool forbidden = false;
            for (int w : window)
                if (w == j) {
                    forbidden = true;
                    break;
                }
            if (forbidden) continue;
            const double diff = std::abs(ci - clustering[j]);
            if (diff < best_diff) {  // strict: ties stay at the lowest id
                best_diff = diff;
                next = j;
            }
        }
        if (next < 0) return WalkOutcome{moves, 0, StopReason::LocallyStuck};
        if (moves == max_steps) return WalkOutcome{max_steps, 0, StopReason::MaxStepsExceeded};

        current = next;
        ++moves;
        if (static_cast<int>(window.size()) == mu) window.erase(window.begin());
        window.push_back(current);
        if (trace) trace->push_back(current);

        if (auto first = seen.find_or_insert(window, moves))
            return WalkOutcome{*first, moves - *first, StopReason::AttractorFound};
    }
}

WalkOutcome walk(const Graph& g, int start, const WalkerConfig& cfg) {
    WalkContext ctx(g);
    return walk(ctx, start, cfg);
}

std::vector<WalkOutcome> walk_all(const Graph& g, const WalkerConfig& cfg) {
    cfg.validate(g.node_count());
    WalkContext ctx(g);
    std::vector<WalkOutcome> outcomes(static_cast<std::size_t>(g.node_count()));
    parallel_for(g.node_count(), [&](long i) {
        outcomes[static_cast<std::size_t>(i)] = walk(ctx, static_cast<int>(i), cfg);
    });
    return outcomes;
}

}  // namespace tourist
