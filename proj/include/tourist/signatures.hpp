#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tourist/walker.hpp"

namespace tourist {

// Normalized joint (transient, attractor) counts over one ensemble of
// launches. Every mass is a multiple of 1/n_launches and the total is 1.
struct JointHistogram {
    std::map<std::pair<int, int>, double> counts;
    int n_launches = 0;

    double at(int t, int a) const {
        auto it = counts.find({t, a});
        return it == counts.end() ? 0.0 : it->second;
    }
};

JointHistogram joint_histogram(const std::vector<WalkOutcome>& outcomes);

// Trajectory-length distribution: h(l) = sum of S(t, a) over t + a = l.
std::map<int, double> length_histogram(const JointHistogram& jh);

struct SignatureLayoutEntry {
    int mu = 0;
    int length = 0;  // trajectory length this position reads from
};

// Feature vector over trajectory lengths. For one memory the layout is
// [h(0), h(mu+1), ..., h(n)]; lengths 1..mu are not indexable and their mass
// is kept per memory in residuals. Mass at lengths >= n folds into the last
// position so graphs larger than the layout stay comparable.
struct SignatureVector {
    std::vector<int> memories;
    std::vector<double> values;
    std::vector<SignatureLayoutEntry> layout;
    std::vector<double> residuals;  // one per memory

    std::size_t size() const { return values.size(); }
};

SignatureVector phi(const JointHistogram& jh, int mu, int n);

// Concatenation of per-memory phi vectors; one histogram per memory, each
// from its own ensemble of launches.
SignatureVector psi(const std::vector<JointHistogram>& jhs, const std::vector<int>& mus, int n);

double mean_trajectory_length(const std::vector<WalkOutcome>& outcomes);

}  // namespace tourist
