#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tourist {

enum class ClassLabel { Regular = 0, Random = 1, SmallWorld = 2 };

const char* to_string(ClassLabel label);
ClassLabel label_from_string(std::string_view name);

struct LabeledSample {
    std::vector<double> features;
    ClassLabel label = ClassLabel::Regular;
    std::string sample_id;
    std::string provenance;
};

// Shared-covariance Gaussian discriminants over the pooled within-class
// covariance with trace-scaled ridge. Prediction is argmax of the linear
// discriminant; ties resolve to the lowest class index.
struct LdaModel {
    std::vector<ClassLabel> classes;  // classes present, ascending
    Eigen::MatrixXd weights;          // d x K
    Eigen::VectorXd bias;             // K
    double ridge_lambda = 0.0;        // value that produced a usable factorization

    ClassLabel predict(const Eigen::VectorXd& x) const;
};

LdaModel lda_fit(const std::vector<LabeledSample>& train, double ridge_lambda = 1e-6);

struct EvaluationReport {
    double accuracy_mean = 0.0;  // percent
    double accuracy_std = 0.0;   // percent, over 10 contiguous blocks
    std::array<std::array<long, 3>, 3> confusion{};  // [true][predicted]
    long n_samples = 0;
    long skipped_folds = 0;
};

// Leave-one-out cross-validation with a fresh fit per fold. zscore enables
// per-fold feature standardization (for mixed-unit structural vectors).
EvaluationReport loocv(const std::vector<LabeledSample>& samples, double ridge_lambda = 1e-6,
                       bool zscore = false);

// Mean-centered projection onto the top principal axes; zero-variance
// features are dropped, component signs fixed by the largest-magnitude
// loading. Returns one row per sample.
Eigen::MatrixXd pca_project(const std::vector<LabeledSample>& samples, int dims = 2);

}  // namespace tourist
