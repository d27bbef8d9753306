#include "tourist/signatures.hpp"

#include <stdexcept>

namespace tourist {

JointHistogram joint_histogram(const std::vector<WalkOutcome>& outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("joint_histogram: no outcomes");
    JointHistogram jh;
    jh.n_launches = static_cast<int>(outcomes.size());
    std::map<std::pair<int, int>, long> raw;
    for (const auto& o : outcomes) ++raw[{o.transient, o.attractor}];
    for (const auto& [key, count] : raw)
        jh.counts[key] = static_cast<double>(count) / static_cast<double>(jh.n_launches);
    return jh;
}

std::map<int, double> length_histogram(const JointHistogram& jh) {
    std::map<int, double> h;
    for (const auto& [key, mass] : jh.counts) h[key.first + key.second] += mass;
    return h;
}

SignatureVector phi(const JointHistogram& jh, int mu, int n) {
    if (mu < 1) throw std::invalid_argument("phi: memory must be >= 1");
    if (n <= mu) throw std::invalid_argument("phi: layout size must exceed memory");
    const auto h = length_histogram(jh);
    SignatureVector sig;
    sig.memories = {mu};
    sig.values.assign(static_cast<std::size_t>(1 + n - mu), 0.0);
    sig.layout.reserve(sig.values.size());
    sig.layout.push_back({mu, 0});
    for (int len = mu + 1; len <= n; ++len) sig.layout.push_back({mu, len});
    sig.residuals = {0.0};
    for (const auto& [len, mass] : h) {
        if (len == 0) {
            sig.values[0] += mass;
        } else if (len <= mu) {
            sig.residuals[0] += mass;
        } else if (len >= n) {
            sig.values.back() += mass;  // tail bucket for graphs above the layout size
        } else {
            sig.values[static_cast<std::size_t>(1 + len - (mu + 1))] += mass;
        }
    }
    return sig;
}

SignatureVector psi(const std::vector<JointHistogram>& jhs, const std::vector<int>& mus, int n) {
    if (jhs.size() != mus.size())
        throw std::invalid_argument("psi: one histogram required per memory");
    if (mus.empty()) throw std::invalid_argument("psi: memory list is empty");
    for (std::size_t i = 1; i < mus.size(); ++i)
        if (mus[i] <= mus[i - 1])
            throw std::invalid_argument("psi: memory list must be strictly increasing");
    SignatureVector sig;
    sig.memories = mus;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        SignatureVector part = phi(jhs[i], mus[i], n);
        sig.values.insert(sig.values.end(), part.values.begin(), part.values.end());
        sig.layout.insert(sig.layout.end(), part.layout.begin(), part.layout.end());
        sig.residuals.push_back(part.residuals[0]);
    }
    return sig;
}

double mean_trajectory_length(const std::vector<WalkOutcome>& outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("mean_trajectory_length: no outcomes");
    double total = 0.0;
    for (const auto& o : outcomes) total += static_cast<double>(o.length());
    return total / static_cast<double>(outcomes.size());
}

}  // namespace tourist
