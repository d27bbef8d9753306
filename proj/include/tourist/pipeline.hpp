#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tourist/classifier.hpp"
#include "tourist/generators.hpp"
#include "tourist/metrics.hpp"
#include "tourist/signatures.hpp"

namespace tourist {

// Fully determines a generated dataset: every graph is a pure function of
// the manifest plus base_seed. The three classes (regular ring lattices,
// Erdos-Renyi graphs at p = <k>/(N-1), Watts-Strogatz graphs with p drawn
// from [ws_p_min, ws_p_max]) share the N x <k> grid; per-class sample count
// is spread round-robin across grid cells.
struct DatasetManifest {
    int format_version = 1;
    std::uint64_t base_seed = 20230501;
    std::vector<int> n_values = {500};
    std::vector<int> mean_degrees = {4, 10, 16};
    int count_per_class = 50;
    double ws_p_min = 0.01;
    double ws_p_max = 0.1;
    double noise_rate = 0.0;
    std::vector<int> mu_values = {1, 2, 3, 4, 5};

    static DatasetManifest desk_default();
    static DatasetManifest paper_scale();
    static DatasetManifest from_json(const nlohmann::json& j);
    static DatasetManifest load(const std::string& path);
    nlohmann::json to_json() const;
    void validate() const;
};

struct SampleRecord {
    std::string id;
    ClassLabel label = ClassLabel::Regular;
    GeneratorSpec spec;
    std::uint64_t noise_seed = 0;
    std::string file;  // relative edge-list path once written
};

std::vector<SampleRecord> plan_dataset(const DatasetManifest& m);
Graph realize_sample(const SampleRecord& record, const DatasetManifest& m);

// Writes canonical edge lists, labels.csv and the resolved manifest (with
// sample records) into out_dir. Returns the plan that was written.
std::vector<SampleRecord> generate_dataset(const DatasetManifest& m, const std::string& out_dir);

struct FeatureTable {
    std::vector<std::string> columns;
    std::vector<LabeledSample> samples;
};

// One psi row per graph; layout size is the smallest node count present so
// mixed-size datasets stay comparable (tail mass folds into the last bucket
// per memory). histograms, when given, receives the per-(graph, mu) joint
// histograms indexed [graph][mu position].
FeatureTable signature_features(const std::vector<SampleRecord>& records,
                                const std::vector<Graph>& graphs, const std::vector<int>& mus,
                                std::vector<std::vector<JointHistogram>>* histograms = nullptr);

FeatureTable structural_features_table(const std::vector<SampleRecord>& records,
                                       const std::vector<Graph>& graphs);

void write_feature_csv(const FeatureTable& table, const std::string& path);
FeatureTable read_feature_csv(const std::string& path);

void write_histogram_csv(const JointHistogram& jh, const std::string& path);

// labels.csv access for a generated dataset directory.
void write_labels_csv(const std::vector<SampleRecord>& records, const std::string& path);
std::vector<SampleRecord> read_labels_csv(const std::string& path);

nlohmann::json to_json(const MetricsReport& report);
nlohmann::json to_json(const EvaluationReport& report);

struct ClassifyOutput {
    EvaluationReport report;
    Eigen::MatrixXd projection;  // n x 2 PCA scores
};

// Default LDA ridge: heavy shrinkage (1e-2) when the pooled covariance is
// underdetermined (d >= n), the light numerical floor (1e-6) otherwise.
double auto_ridge(std::size_t n_samples, std::size_t n_features);

// method: "dtw" (signature features, no scaling) or "structural"
// (per-fold z-scoring). ridge_lambda 0 selects auto_ridge.
ClassifyOutput classify_features(const FeatureTable& table, const std::string& method,
                                 double ridge_lambda = 0.0);

struct SweepRow {
    double p = 0.0;
    int k = 0;
    int mu = 0;
    int seed_index = 0;
    double chi = 0.0;
    double omega = 0.0;
    double clustering = 0.0;
    double mean_len = 0.0;
};

// Watts-Strogatz sweep over rewiring probabilities; omega is computed once
// per graph and repeated across the mu rows.
std::vector<SweepRow> run_sweep(int n, int k, const std::vector<double>& ps,
                                const std::vector<int>& mus, int seeds, int realizations,
                                std::uint64_t base_seed);
std::vector<double> log_spaced(double lo, double hi, int count);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

struct BenchRow {
    long n = 0;
    std::string metric;  // "chi" or "omega"
    int mu = 0;          // 0 for omega
    double median_ms = 0.0;
};

std::vector<BenchRow> run_bench(const std::vector<long>& sizes, double p,
                                const std::vector<int>& mus, int repeats, int realizations,
                                std::uint64_t seed);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

}  // namespace tourist
