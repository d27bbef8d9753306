#include "tourist/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tourist/parallel.hpp"

namespace tourist {

namespace {

constexpr double kMaxRidge = 1e-2;

struct Design {
    Eigen::MatrixXd x;          // n x d
    std::vector<int> y;         // class index per row
    std::vector<ClassLabel> classes;
    std::vector<long> counts;   // per class index
};

Design build_design(const std::vector<LabeledSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("lda: no samples");
    const auto d = samples.front().features.size();
    std::array<long, 3> per_label{};
    for (const auto& s : samples) {
        if (s.features.size() != d)
            throw std::invalid_argument("lda: inconsistent feature lengths");
        ++per_label[static_cast<std::size_t>(s.label)];
    }
    Design design;
    for (int c = 0; c < 3; ++c)
        if (per_label[static_cast<std::size_t>(c)] > 0) {
            design.classes.push_back(static_cast<ClassLabel>(c));
            design.counts.push_back(per_label[static_cast<std::size_t>(c)]);
        }
    std::array<int, 3> label_to_index{-1, -1, -1};
    for (std::size_t k = 0; k < design.classes.size(); ++k)
        label_to_index[static_cast<std::size_t>(design.classes[k])] = static_cast<int>(k);

    design.x.resize(static_cast<Eigen::Index>(samples.size()), static_cast<Eigen::Index>(d));
    design.y.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const double v = samples[i].features[j];
            if (!std::isfinite(v)) throw std::invalid_argument("lda: non-finite feature value");
            design.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }
        design.y.push_back(label_to_index[static_cast<std::size_t>(samples[i].label)]);
    }
    return design;
}

// Solves (Sigma + alpha I) w = mean_k for every class. The dual path goes
// through the n x n Gram matrix, which is the cheap side when d >> n; both
// paths compute the same discriminants.
bool solve_discriminants(const Eigen::MatrixXd& xw, const Eigen::MatrixXd& means, double df,
                         double alpha, Eigen::MatrixXd& weights) {
    const Eigen::Index n = xw.rows();
    const Eigen::Index d = xw.cols();
    if (d <= n) {
        Eigen::MatrixXd a = (xw.transpose() * xw) / df;
        a.diagonal().array() += alpha;
        Eigen::LLT<Eigen::MatrixXd> llt(a);
        if (llt.info() != Eigen::Success) return false;
        weights = llt.solve(means);
    } else {
        Eigen::MatrixXd m = xw * xw.transpose();
        m.diagonal().array() += alpha * df;
        Eigen::LLT<Eigen::MatrixXd> llt(m);
        if (llt.info() != Eigen::Success) return false;
        weights = (means - xw.transpose() * llt.solve(xw * means)) / alpha;
    }
    return weights.allFinite();
}

}  // namespace

const char* to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Regular: return "regular";
        case ClassLabel::Random: return "random";
        case ClassLabel::SmallWorld: return "small_world";
    }
    return "unknown";
}

ClassLabel label_from_string(std::string_view name) {
    if (name == "regular") return ClassLabel::Regular;
    if (name == "random") return ClassLabel::Random;
    if (name == "small_world") return ClassLabel::SmallWorld;
    throw std::invalid_argument("unknown class label: " + std::string(name));
}

ClassLabel LdaModel::predict(const Eigen::VectorXd& x) const {
    Eigen::VectorXd scores = weights.transpose() * x + bias;
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < scores.size(); ++k)
        if (scores(k) > scores(best)) best = k;
    return classes[static_cast<std::size_t>(best)];
}

LdaModel lda_fit(const std::vector<LabeledSample>& train, double ridge_lambda) {
    Design design = build_design(train);
    if (design.classes.size() < 2)
        throw std::invalid_argument("lda: need at least two classes");
    for (long c : design.counts)
        if (c < 2) throw std::invalid_argument("lda: need at least two samples per class");

    const Eigen::Index n = design.x.rows();
    const Eigen::Index d = design.x.cols();
    const auto k_classes = static_cast<Eigen::Index>(design.classes.size());

    Eigen::MatrixXd means = Eigen::MatrixXd::Zero(d, k_classes);
    for (Eigen::Index i = 0; i < n; ++i)
        means.col(design.y[static_cast<std::size_t>(i)]) += design.x.row(i).transpose();
    for (Eigen::Index k = 0; k < k_classes; ++k)
        means.col(k) /= static_cast<double>(design.counts[static_cast<std::size_t>(k)]);

    Eigen::MatrixXd xw = design.x;
    for (Eigen::Index i = 0; i < n; ++i)
        xw.row(i) -= means.col(design.y[static_cast<std::size_t>(i)]).transpose();

    const double df = static_cast<double>(n - k_classes);
    const double trace_sigma = xw.squaredNorm() / df;

    LdaModel model;
    model.classes = design.classes;
    double lambda = ridge_lambda;
    for (;; lambda *= 10.0) {
        // Trace-scaled ridge; absolute fallback when the scatter is all zero.
        const double alpha =
            trace_sigma > 0.0 ? lambda * trace_sigma / static_cast<double>(d) : lambda;
        if (solve_discriminants(xw, means, df, alpha, model.weights)) break;
        if (lambda >= kMaxRidge)
            throw std::runtime_error(
                "lda: covariance singular even at ridge lambda=1e-2 (n=" + std::to_string(n) +
                ", d=" + std::to_string(d) + ")");
    }
    model.ridge_lambda = lambda;

    model.bias.resize(k_classes);
    const double total = static_cast<double>(n);
    for (Eigen::Index k = 0; k < k_classes; ++k) {
        const double prior = static_cast<double>(design.counts[static_cast<std::size_t>(k)]) / total;
        model.bias(k) = -0.5 * means.col(k).dot(model.weights.col(k)) + std::log(prior);
    }
    return model;
}

EvaluationReport loocv(const std::vector<LabeledSample>& samples, double ridge_lambda,
                       bool zscore) {
    if (samples.size() < 3) throw std::invalid_argument("loocv: need at least three samples");
    std::array<long, 3> per_label{};
    for (const auto& s : samples) ++per_label[static_cast<std::size_t>(s.label)];
    if (std::count_if(per_label.begin(), per_label.end(), [](long c) { return c > 0; }) < 2)
        throw std::invalid_argument("loocv: need at least two classes");

    const long n = static_cast<long>(samples.size());
    std::vector<int> predicted(samples.size(), -1);  // -1 = fold skipped
    parallel_for(n, [&](long i) {
        const auto held = static_cast<std::size_t>(i);
        // Classes too thin to fit in this training fold are left out; the
        // fold itself is skipped when the held-out label is among them.
        std::array<long, 3> in_train = per_label;
        --in_train[static_cast<std::size_t>(samples[held].label)];
        if (in_train[static_cast<std::size_t>(samples[held].label)] < 2) return;
        std::vector<LabeledSample> train;
        train.reserve(samples.size() - 1);
        for (std::size_t j = 0; j < samples.size(); ++j)
            if (j != held && in_train[static_cast<std::size_t>(samples[j].label)] >= 2)
                train.push_back(samples[j]);

        Eigen::VectorXd probe =
            Eigen::Map<const Eigen::VectorXd>(samples[held].features.data(),
                                              static_cast<Eigen::Index>(samples[held].features.size()));
        if (zscore) {
            const auto d = train.front().features.size();
            std::vector<double> mean(d, 0.0), sd(d, 0.0);
            for (const auto& s : train)
                for (std::size_t c = 0; c < d; ++c) mean[c] += s.features[c];
            for (auto& m : mean) m /= static_cast<double>(train.size());
            for (const auto& s : train)
                for (std::size_t c = 0; c < d; ++c) {
                    const double diff = s.features[c] - mean[c];
                    sd[c] += diff * diff;
                }
            for (auto& v : sd) v = std::sqrt(v / static_cast<double>(train.size()));
            for (auto& s : train)
                for (std::size_t c = 0; c < d; ++c)
                    s.features[c] = (s.features[c] - mean[c]) / (sd[c] > 0.0 ? sd[c] : 1.0);
            for (std::size_t c = 0; c < d; ++c)
                probe(static_cast<Eigen::Index>(c)) =
                    (probe(static_cast<Eigen::Index>(c)) - mean[c]) / (sd[c] > 0.0 ? sd[c] : 1.0);
        }
        LdaModel model = lda_fit(train, ridge_lambda);
        predicted[held] = static_cast<int>(model.predict(probe));
    });

    EvaluationReport report;
    std::vector<double> correctness;
    correctness.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (predicted[i] < 0) {
            ++report.skipped_folds;
            continue;
        }
        const auto truth = static_cast<std::size_t>(samples[i].label);
        report.confusion[truth][static_cast<std::size_t>(predicted[i])] += 1;
        correctness.push_back(predicted[i] == static_cast<int>(samples[i].label) ? 1.0 : 0.0);
    }
    report.n_samples = static_cast<long>(correctness.size());
    if (report.n_samples == 0) throw std::runtime_error("loocv: every fold was skipped");
    double correct = 0.0;
    for (double c : correctness) correct += c;
    report.accuracy_mean = 100.0 * correct / static_cast<double>(report.n_samples);

    // Spread estimate: accuracy over 10 contiguous blocks of the per-sample
    // correctness sequence, population standard deviation.
    const long blocks = std::min<long>(10, report.n_samples);
    std::vector<double> block_acc;
    for (long b = 0; b < blocks; ++b) {
        const auto lo = static_cast<std::size_t>(b * report.n_samples / blocks);
        const auto hi = static_cast<std::size_t>((b + 1) * report.n_samples / blocks);
        if (hi == lo) continue;
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += correctness[i];
        block_acc.push_back(100.0 * sum / static_cast<double>(hi - lo));
    }
    double mean_acc = 0.0;
    for (double a : block_acc) mean_acc += a;
    mean_acc /= static_cast<double>(block_acc.size());
    double ss = 0.0;
    for (double a : block_acc) ss += (a - mean_acc) * (a - mean_acc);
    report.accuracy_std = std::sqrt(ss / static_cast<double>(block_acc.size()));
    return report;
}

Eigen::MatrixXd pca_project(const std::vector<LabeledSample>& samples, int dims) {
    if (samples.empty()) throw std::invalid_argument("pca: no samples");
    const auto d = samples.front().features.size();
    if (static_cast<int>(d) < dims)
        throw std::invalid_argument("pca: feature length below requested dimensions");
    for (const auto& s : samples)
        if (s.features.size() != d) throw std::invalid_argument("pca: inconsistent feature lengths");

    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd x(n, static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            x(i, static_cast<Eigen::Index>(j)) = samples[static_cast<std::size_t>(i)].features[j];

    // Keep only varying columns.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        if (x.col(j).maxCoeff() != x.col(j).minCoeff()) keep.push_back(j);
    Eigen::MatrixXd centered(n, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
        Eigen::VectorXd col = x.col(keep[j]);
        centered.col(static_cast<Eigen::Index>(j)) = col.array() - col.mean();
    }

    Eigen::MatrixXd scores = Eigen::MatrixXd::Zero(n, dims);
    if (keep.empty() || n < 2) return scores;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::Index available = std::min<Eigen::Index>(dims, svd.singularValues().size());
    for (Eigen::Index c = 0; c < available; ++c) {
        Eigen::VectorXd loading = svd.matrixV().col(c);
        Eigen::Index strongest = 0;
        for (Eigen::Index j = 1; j < loading.size(); ++j)
            if (std::abs(loading(j)) > std::abs(loading(strongest))) strongest = j;
        const double sign = loading(strongest) < 0.0 ? -1.0 : 1.0;
        scores.col(c) = sign * svd.matrixU().col(c) * svd.singularValues()(c);
    }
    return scores;
}

}  // namespace tourist
