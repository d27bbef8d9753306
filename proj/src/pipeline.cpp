#include "tourist/pipeline.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tourist/ingest.hpp"
#include "tourist/parallel.hpp"
#include "tourist/rng.hpp"

namespace fs = std::filesystem;

namespace tourist {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
    }
    fs::rename(tmp, path);
}

}  // namespace

DatasetManifest DatasetManifest::desk_default() { return DatasetManifest{}; }

DatasetManifest DatasetManifest::paper_scale() {
    DatasetManifest m;
    m.n_values = {500, 1000, 1500, 2000};
    m.mean_degrees = {4, 6, 8, 10, 12, 14, 16};
    m.count_per_class = 2800;  // 100 per (N, <k>) cell
    return m;
}

void DatasetManifest::validate() const {
    if (format_version != 1) throw std::invalid_argument("manifest: unsupported format_version");
    if (n_values.empty()) throw std::invalid_argument("manifest: n_values is empty");
    if (mean_degrees.empty()) throw std::invalid_argument("manifest: mean_degrees is empty");
    if (count_per_class < 1) throw std::invalid_argument("manifest: count_per_class must be >= 1");
    if (!(ws_p_min >= 0.0 && ws_p_max <= 1.0 && ws_p_min <= ws_p_max))
        throw std::invalid_argument("manifest: ws_p range must satisfy 0 <= min <= max <= 1");
    if (noise_rate < 0.0 || noise_rate > 1.0)
        throw std::invalid_argument("manifest: noise_rate must lie in [0, 1]");
    if (mu_values.empty()) throw std::invalid_argument("manifest: mu_values is empty");
    for (int n : n_values)
        for (int k : mean_degrees) {
            GeneratorSpec probe{GraphModel::Regular, n, k, 0.0, 0};
            probe.validate();
        }
}

nlohmann::json DatasetManifest::to_json() const {
    return nlohmann::json{{"format_version", format_version},
                          {"base_seed", base_seed},
                          {"n_values", n_values},
                          {"mean_degrees", mean_degrees},
                          {"count_per_class", count_per_class},
                          {"ws_p_min", ws_p_min},
                          {"ws_p_max", ws_p_max},
                          {"noise_rate", noise_rate},
                          {"mu_values", mu_values}};
}

DatasetManifest DatasetManifest::from_json(const nlohmann::json& j) {
    DatasetManifest m;
    try {
        if (j.contains("format_version")) j.at("format_version").get_to(m.format_version);
        if (j.contains("base_seed")) j.at("base_seed").get_to(m.base_seed);
        if (j.contains("n_values")) j.at("n_values").get_to(m.n_values);
        if (j.contains("mean_degrees")) j.at("mean_degrees").get_to(m.mean_degrees);
        if (j.contains("count_per_class")) j.at("count_per_class").get_to(m.count_per_class);
        if (j.contains("ws_p_min")) j.at("ws_p_min").get_to(m.ws_p_min);
        if (j.contains("ws_p_max")) j.at("ws_p_max").get_to(m.ws_p_max);
        if (j.contains("noise_rate")) j.at("noise_rate").get_to(m.noise_rate);
        if (j.contains("mu_values")) j.at("mu_values").get_to(m.mu_values);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("manifest: ") + e.what());
    }
    m.validate();
    return m;
}

DatasetManifest DatasetManifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

std::vector<SampleRecord> plan_dataset(const DatasetManifest& m) {
    m.validate();
    struct Cell {
        int n;
        int k;
    };
    std::vector<Cell> grid;
    for (int n : m.n_values)
        for (int k : m.mean_degrees) grid.push_back({n, k});

    const std::array<ClassLabel, 3> order = {ClassLabel::Regular, ClassLabel::Random,
                                             ClassLabel::SmallWorld};
    std::vector<SampleRecord> plan;
    plan.reserve(static_cast<std::size_t>(m.count_per_class) * 3);
    std::uint64_t global_index = 0;
    for (ClassLabel label : order) {
        for (int i = 0; i < m.count_per_class; ++i, ++global_index) {
            const Cell& cell = grid[static_cast<std::size_t>(i) % grid.size()];
            SampleRecord rec;
            rec.label = label;
            rec.spec.n = cell.n;
            rec.spec.mean_degree = cell.k;
            rec.spec.seed = Rng::derive(m.base_seed, global_index);
            rec.noise_seed = Rng::derive(rec.spec.seed, 1);
            switch (label) {
                case ClassLabel::Regular:
                    rec.spec.model = GraphModel::Regular;
                    break;
                case ClassLabel::Random:
                    rec.spec.model = GraphModel::ErdosRenyi;
                    break;
                case ClassLabel::SmallWorld: {
                    rec.spec.model = GraphModel::WattsStrogatz;
                    Rng p_draw(Rng::derive(rec.spec.seed, 2));
                    rec.spec.rewiring_p =
                        m.ws_p_min + (m.ws_p_max - m.ws_p_min) * p_draw.next_double();
                    break;
                }
            }
            char idx[16];
            std::snprintf(idx, sizeof(idx), "%04d", i);
            rec.id = std::string(to_string(label)) + "_" + idx;
            rec.file = "graphs/" + rec.id + ".edges";
            plan.push_back(std::move(rec));
        }
    }
    return plan;
}

Graph realize_sample(const SampleRecord& record, const DatasetManifest& m) {
    Graph g = generate(record.spec);
    if (m.noise_rate > 0.0) g = apply_noise(g, NoiseSpec{m.noise_rate, record.noise_seed});
    return g;
}

std::vector<SampleRecord> generate_dataset(const DatasetManifest& m, const std::string& out_dir) {
    auto plan = plan_dataset(m);
    fs::create_directories(fs::path(out_dir) / "graphs");
    parallel_for(static_cast<long>(plan.size()), [&](long i) {
        const auto& rec = plan[static_cast<std::size_t>(i)];
        Graph g = realize_sample(rec, m);
        std::ostringstream body;
        write_canonical_edge_list(g, body);
        atomic_write((fs::path(out_dir) / rec.file).string(), body.str());
    });
    write_labels_csv(plan, (fs::path(out_dir) / "labels.csv").string());

    nlohmann::json j = m.to_json();
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& rec : plan)
        samples.push_back({{"id", rec.id},
                           {"label", to_string(rec.label)},
                           {"file", rec.file},
                           {"model", to_string(rec.spec.model)},
                           {"n", rec.spec.n},
                           {"mean_degree", rec.spec.mean_degree},
                           {"rewiring_p", rec.spec.rewiring_p},
                           {"seed", rec.spec.seed},
                           {"noise_seed", rec.noise_seed}});
    j["samples"] = std::move(samples);
    atomic_write((fs::path(out_dir) / "manifest.json").string(), j.dump(2) + "\n");
    return plan;
}

FeatureTable signature_features(const std::vector<SampleRecord>& records,
                                const std::vector<Graph>& graphs, const std::vector<int>& mus,
                                std::vector<std::vector<JointHistogram>>* histograms) {
    if (records.size() != graphs.size())
        throw std::invalid_argument("signature_features: records/graphs size mismatch");
    if (records.empty()) throw std::invalid_argument("signature_features: empty dataset");
    int layout_n = graphs.front().node_count();
    for (const auto& g : graphs) layout_n = std::min(layout_n, g.node_count());

    std::vector<SignatureVector> sigs(records.size());
    if (histograms) histograms->assign(records.size(), {});
    parallel_for(static_cast<long>(records.size()), [&](long i) {
        const Graph& g = graphs[static_cast<std::size_t>(i)];
        std::vector<JointHistogram> hists;
        hists.reserve(mus.size());
        for (int mu : mus) {
            WalkerConfig cfg{mu, 0};
            hists.push_back(joint_histogram(walk_all(g, cfg)));
        }
        sigs[static_cast<std::size_t>(i)] = psi(hists, mus, layout_n);
        if (histograms) (*histograms)[static_cast<std::size_t>(i)] = std::move(hists);
    });

    FeatureTable table;
    for (const auto& entry : sigs.front().layout)
        table.columns.push_back("mu" + std::to_string(entry.mu) + "_len" +
                                std::to_string(entry.length));
    table.samples.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        LabeledSample s;
        s.features = std::move(sigs[i].values);
        s.label = records[i].label;
        s.sample_id = records[i].id;
        s.provenance = records[i].file;
        table.samples.push_back(std::move(s));
    }
    return table;
}

FeatureTable structural_features_table(const std::vector<SampleRecord>& records,
                                       const std::vector<Graph>& graphs) {
    if (records.size() != graphs.size())
        throw std::invalid_argument("structural_features_table: records/graphs size mismatch");
    FeatureTable table;
    for (const char* name : StructuralFeatures::names()) table.columns.emplace_back(name);
    table.samples.resize(records.size());
    parallel_for(static_cast<long>(records.size()), [&](long i) {
        const auto idx = static_cast<std::size_t>(i);
        StructuralFeatures f = structural_features(graphs[idx]);
        LabeledSample s;
        s.features.assign(f.values.begin(), f.values.end());
        s.label = records[idx].label;
        s.sample_id = records[idx].id;
        s.provenance = records[idx].file;
        table.samples[idx] = std::move(s);
    });
    return table;
}

void write_feature_csv(const FeatureTable& table, const std::string& path) {
    std::ostringstream out;
    out << "sample_id,label";
    for (const auto& c : table.columns) out << ',' << c;
    out << '\n';
    for (const auto& s : table.samples) {
        out << s.sample_id << ',' << to_string(s.label);
        for (double v : s.features) out << ',' << format_double(v);
        out << '\n';
    }
    atomic_write(path, out.str());
}

FeatureTable read_feature_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open features: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty feature file");
    auto header = split_csv_row(line);
    if (header.size() < 3 || header[0] != "sample_id" || header[1] != "label")
        throw std::runtime_error(path + ": expected header sample_id,label,<columns...>");
    FeatureTable table;
    table.columns.assign(header.begin() + 2, header.end());
    long line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        auto row = split_csv_row(line);
        if (row.size() != header.size())
            throw std::runtime_error(path + ": line " + std::to_string(line_number) +
                                     ": expected " + std::to_string(header.size()) + " fields");
        LabeledSample s;
        s.sample_id = row[0];
        s.label = label_from_string(row[1]);
        s.features.reserve(table.columns.size());
        for (std::size_t i = 2; i < row.size(); ++i) s.features.push_back(std::stod(row[i]));
        table.samples.push_back(std::move(s));
    }
    if (table.samples.empty()) throw std::runtime_error(path + ": no feature rows");
    return table;
}

void write_histogram_csv(const JointHistogram& jh, const std::string& path) {
    std::ostringstream out;
    out << "t,a,mass\n";
    for (const auto& [key, mass] : jh.counts)
        out << key.first << ',' << key.second << ',' << format_double(mass) << '\n';
    atomic_write(path, out.str());
}

void write_labels_csv(const std::vector<SampleRecord>& records, const std::string& path) {
    std::ostringstream out;
    out << "sample_id,label,file,model,n,mean_degree,rewiring_p,seed,noise_seed\n";
    for (const auto& rec : records)
        out << rec.id << ',' << to_string(rec.label) << ',' << rec.file << ','
            << to_string(rec.spec.model) << ',' << rec.spec.n << ',' << rec.spec.mean_degree << ','
            << format_double(rec.spec.rewiring_p) << ',' << rec.spec.seed << ',' << rec.noise_seed
            << '\n';
    atomic_write(path, out.str());
}

std::vector<SampleRecord> read_labels_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labels: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty labels file");
    const auto header = split_csv_row(line);
    if (header.size() < 9) throw std::runtime_error(path + ": unexpected labels header");
    std::vector<SampleRecord> records;
    long line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        auto row = split_csv_row(line);
        if (row.size() != header.size())
            throw std::runtime_error(path + ": line " + std::to_string(line_number) +
                                     ": malformed labels row");
        SampleRecord rec;
        rec.id = row[0];
        rec.label = label_from_string(row[1]);
        rec.file = row[2];
        rec.spec.model = model_from_string(row[3]);
        rec.spec.n = std::stoi(row[4]);
        rec.spec.mean_degree = std::stoi(row[5]);
        rec.spec.rewiring_p = std::stod(row[6]);
        rec.spec.seed = std::stoull(row[7]);
        rec.noise_seed = std::stoull(row[8]);
        records.push_back(std::move(rec));
    }
    return records;
}

nlohmann::json to_json(const MetricsReport& r) {
    return nlohmann::json{{"clustering_C", r.clustering_C},
                          {"avg_path_L", r.avg_path_L},
                          {"mean_walk_len", r.mean_walk_len},
                          {"baseline_walk_len", r.baseline_walk_len},
                          {"baseline_L_random", r.baseline_L_random},
                          {"baseline_C_lattice", r.baseline_C_lattice},
                          {"chi", r.chi},
                          {"omega", r.omega_degenerate ? nlohmann::json() : nlohmann::json(r.omega)},
                          {"mu", r.mu},
                          {"baseline_realizations", r.baseline_realizations},
                          {"seed", r.seed},
                          {"chi_degenerate", r.chi_degenerate},
                          {"omega_degenerate", r.omega_degenerate},
                          {"path_degenerate", r.path_degenerate}};
}

nlohmann::json to_json(const EvaluationReport& r) {
    return nlohmann::json{{"accuracy_mean", r.accuracy_mean},
                          {"accuracy_std", r.accuracy_std},
                          {"confusion", r.confusion},
                          {"n_samples", r.n_samples},
                          {"skipped_folds", r.skipped_folds}};
}

double auto_ridge(std::size_t n_samples, std::size_t n_features) {
    return n_features >= n_samples ? 1e-2 : 1e-6;
}

ClassifyOutput classify_features(const FeatureTable& table, const std::string& method,
                                 double ridge_lambda) {
    bool zscore;
    if (method == "dtw") {
        zscore = false;
    } else if (method == "structural") {
        zscore = true;
    } else {
        throw std::invalid_argument("classify: method must be 'dtw' or 'structural'");
    }
    if (ridge_lambda <= 0.0)
        ridge_lambda = auto_ridge(table.samples.size(),
                                  table.samples.empty() ? 0 : table.samples.front().features.size());
    ClassifyOutput out;
    out.report = loocv(table.samples, ridge_lambda, zscore);
    out.projection = pca_project(table.samples, 2);
    return out;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (count < 2 || lo <= 0.0 || hi <= lo)
        throw std::invalid_argument("log_spaced: need count >= 2 and 0 < lo < hi");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = (std::log10(hi) - std::log10(lo)) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, std::log10(lo) + step * i);
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<SweepRow> run_sweep(int n, int k, const std::vector<double>& ps,
                                const std::vector<int>& mus, int seeds, int realizations,
                                std::uint64_t base_seed) {
    if (seeds < 1) throw std::invalid_argument("run_sweep: seeds must be >= 1");
    const long items = static_cast<long>(ps.size()) * seeds;
    std::vector<SweepRow> rows(static_cast<std::size_t>(items) * mus.size());
    parallel_for(items, [&](long item) {
        const auto p_idx = static_cast<std::size_t>(item) / static_cast<std::size_t>(seeds);
        const int seed_idx = static_cast<int>(item % seeds);
        GeneratorSpec spec{GraphModel::WattsStrogatz, n, k, ps[p_idx],
                           Rng::derive(base_seed, static_cast<std::uint64_t>(item))};
        Graph g = watts_strogatz(spec);
        const double omega_value = omega(g, realizations, Rng::derive(spec.seed, 101));
        for (std::size_t mi = 0; mi < mus.size(); ++mi) {
            WalkerConfig cfg{mus[mi], 0};
            MetricsReport rep =
                chi(g, cfg, realizations, Rng::derive(spec.seed, 102 + static_cast<std::uint64_t>(mus[mi])));
            SweepRow& row = rows[static_cast<std::size_t>(item) * mus.size() + mi];
            row.p = ps[p_idx];
            row.k = k;
            row.mu = mus[mi];
            row.seed_index = seed_idx;
            row.chi = rep.chi;
            row.omega = omega_value;
            row.clustering = rep.clustering_C;
            row.mean_len = rep.mean_walk_len;
        }
    });
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ostringstream out;
    out << "p,k,mu,seed,chi,omega,C,mean_len\n";
    for (const auto& r : rows)
        out << format_double(r.p) << ',' << r.k << ',' << r.mu << ',' << r.seed_index << ','
            << format_double(r.chi) << ',' << format_double(r.omega) << ','
            << format_double(r.clustering) << ',' << format_double(r.mean_len) << '\n';
    atomic_write(path, out.str());
}

std::vector<BenchRow> run_bench(const std::vector<long>& sizes, double p,
                                const std::vector<int>& mus, int repeats, int realizations,
                                std::uint64_t seed) {
    if (repeats < 1) throw std::invalid_argument("run_bench: repeats must be >= 1");
    using clock = std::chrono::steady_clock;
    auto median_of = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const std::size_t mid = v.size() / 2;
        return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
    };

    std::vector<BenchRow> rows;
    for (long n : sizes) {
        GeneratorSpec spec{GraphModel::WattsStrogatz, static_cast<int>(n), 10, p,
                           Rng::derive(seed, static_cast<std::uint64_t>(n))};
        Graph g = watts_strogatz(spec);
        for (int mu : mus) {
            WalkerConfig cfg{mu, 0};
            std::vector<double> times;
            for (int rep = 0; rep < repeats; ++rep) {
                const auto t0 = clock::now();
                volatile double sink = chi(g, cfg, realizations, Rng::derive(spec.seed, 7)).chi;
                (void)sink;
                times.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
            }
            rows.push_back({n, "chi", mu, median_of(times)});
        }
        std::vector<double> times;
        for (int rep = 0; rep < repeats; ++rep) {
            const auto t0 = clock::now();
            volatile double sink = omega(g, realizations, Rng::derive(spec.seed, 8));
            (void)sink;
            times.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        }
        rows.push_back({n, "omega", 0, median_of(times)});
    }
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.metric, a.n, a.mu) < std::tie(b.metric, b.n, b.mu);
    });
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path) {
    std::ostringstream out;
    out << "N,metric,mu,median_ms\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.metric << ',' << r.mu << ',' << format_double(r.median_ms) << '\n';
    atomic_write(path, out.str());
}

}  // namespace tourist
