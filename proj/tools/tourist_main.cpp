// Command-line front end: dataset generation, tourist walks + signatures,
// LDA/LOOCV classification, chi/omega metrics and sweeps, runtime benchmarks.
// Outputs are CSV/JSON shaped for external plotting tools.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourist/ingest.hpp"
#include "tourist/pipeline.hpp"
#include "tourist/rng.hpp"

namespace fs = std::filesystem;
using namespace tourist;

namespace {

struct LoadedGraph {
    std::string id;
    Graph graph;
};

LoadedGraph load_graph(const std::string& path) {
    ParsedGraph parsed = parse_edge_list_file(path);
    return {fs::path(path).stem().string(), std::move(parsed.graph)};
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"Modified deterministic tourist walk on undirected graphs: dataset "
                 "generation, signature extraction, classification, and the chi/omega "
                 "small-world metrics."};
    app.require_subcommand(1);

    // ---- generate ----------------------------------------------------------
    std::string gen_manifest, gen_out;
    bool gen_paper_scale = false;
    double gen_noise = -1.0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    auto* gen = app.add_subcommand("generate", "Generate a labeled synthetic dataset");
    gen->add_option("--manifest", gen_manifest, "Manifest JSON (defaults to the desk-scale grid)");
    gen->add_flag("--paper-scale", gen_paper_scale,
                  "Use the full 4x7 grid with 100 graphs per cell (8400 networks)");
    gen->add_option("--out-dir", gen_out, "Output directory")->required();
    gen->add_option("--noise", gen_noise, "Noise rate in [0,1], overrides the manifest");
    gen->add_option("--seed", gen_seed, "Base seed, overrides the manifest")
        ->each([&](const std::string&) { gen_seed_set = true; });

    // ---- walk --------------------------------------------------------------
    std::vector<std::string> walk_graphs;
    std::string walk_dataset, walk_out;
    std::vector<int> walk_mus = {1, 2, 3, 4, 5};
    bool walk_structural = false, walk_trace = false;
    auto* walk_cmd = app.add_subcommand("walk", "Run walks and emit signature vectors + histograms");
    walk_cmd->add_option("graphs", walk_graphs, "Edge-list files to walk");
    walk_cmd->add_option("--dataset", walk_dataset, "Generated dataset directory (labels.csv)");
    walk_cmd->add_option("--mu", walk_mus, "Memory sizes")->delimiter(',');
    walk_cmd->add_option("--out-dir", walk_out, "Output directory")->required();
    walk_cmd->add_flag("--structural", walk_structural, "Also emit the structural feature table");
    walk_cmd->add_flag("--trace", walk_trace, "Dump per-launch visit traces (file mode)");

    // ---- classify ----------------------------------------------------------
    std::string cls_features, cls_method = "dtw", cls_out;
    double cls_ridge = 0.0;
    auto* cls = app.add_subcommand("classify", "LDA + leave-one-out cross-validation");
    cls->add_option("--features", cls_features, "Feature CSV from the walk command")->required();
    cls->add_option("--method", cls_method, "dtw or structural")
        ->check(CLI::IsMember({"dtw", "structural"}));
    cls->add_option("--out-dir", cls_out, "Output directory")->required();
    cls->add_option("--ridge", cls_ridge, "LDA ridge lambda (0 = auto by sample/feature ratio)");

    // ---- metric ------------------------------------------------------------
    std::string met_graph, met_out;
    int met_mu = 1, met_realizations = 10;
    std::uint64_t met_seed = 1;
    bool met_sweep = false;
    int sweep_n = 500, sweep_k = 8, sweep_steps = 20, sweep_seeds = 5;
    double sweep_pmin = 1e-4, sweep_pmax = 1.0;
    std::vector<int> sweep_mus = {1, 2, 3};
    auto* met = app.add_subcommand("metric", "chi/omega report for a graph, or a WS p-sweep");
    met->add_option("--graph", met_graph, "Edge-list file");
    met->add_option("--mu", met_mu, "Walker memory");
    met->add_option("--realizations", met_realizations, "Random baselines per metric");
    met->add_option("--seed", met_seed, "Baseline seed");
    met->add_option("--out", met_out, "Output file (JSON report or sweep CSV)");
    met->add_flag("--sweep", met_sweep, "Sweep WS rewiring probabilities instead");
    met->add_option("--n", sweep_n, "Sweep: network size");
    met->add_option("--k", sweep_k, "Sweep: mean degree");
    met->add_option("--p-min", sweep_pmin, "Sweep: smallest p");
    met->add_option("--p-max", sweep_pmax, "Sweep: largest p");
    met->add_option("--p-steps", sweep_steps, "Sweep: number of log-spaced p values");
    met->add_option("--seeds", sweep_seeds, "Sweep: graphs per p");
    met->add_option("--sweep-mu", sweep_mus, "Sweep: memory sizes")->delimiter(',');

    // ---- bench -------------------------------------------------------------
    std::vector<long> bench_sizes = {100, 1000, 10000};
    double bench_p = 0.05;
    std::vector<int> bench_mus = {1, 2, 3};
    int bench_repeats = 3, bench_realizations = 10;
    std::uint64_t bench_seed = 1;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Wall-clock comparison of chi vs omega");
    bench->add_option("--sizes", bench_sizes, "Network sizes")->delimiter(',');
    bench->add_option("--p", bench_p, "WS rewiring probability");
    bench->add_option("--mu", bench_mus, "Memory sizes for chi")->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "Repetitions per timing");
    bench->add_option("--realizations", bench_realizations, "Random baselines per metric");
    bench->add_option("--seed", bench_seed, "Generation seed");
    bench->add_option("--out", bench_out, "Output CSV")->required();

    // ---- summary -----------------------------------------------------------
    std::string sum_graph;
    auto* sum = app.add_subcommand("summary", "Ingestion summary of an edge-list file");
    sum->add_option("--graph", sum_graph, "Edge-list file")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        DatasetManifest manifest = gen_paper_scale ? DatasetManifest::paper_scale()
                                   : gen_manifest.empty() ? DatasetManifest::desk_default()
                                                          : DatasetManifest::load(gen_manifest);
        if (gen_noise >= 0.0) manifest.noise_rate = gen_noise;
        if (gen_seed_set) manifest.base_seed = gen_seed;
        auto plan = generate_dataset(manifest, gen_out);
        std::cout << "wrote " << plan.size() << " graphs + labels.csv + manifest.json to "
                  << gen_out << "\n";
        return 0;
    }

    if (walk_cmd->parsed()) {
        fs::create_directories(walk_out);
        if (!walk_dataset.empty()) {
            auto records = read_labels_csv((fs::path(walk_dataset) / "labels.csv").string());
            std::vector<Graph> graphs;
            graphs.reserve(records.size());
            for (const auto& rec : records) {
                Graph g = parse_edge_list_file((fs::path(walk_dataset) / rec.file).string()).graph;
                // Edge lists cannot carry isolated nodes; restore the recorded size.
                if (g.node_count() < rec.spec.n) g = Graph::from_edges(rec.spec.n, g.edges());
                graphs.push_back(std::move(g));
            }
            std::vector<std::vector<JointHistogram>> hists;
            FeatureTable table = signature_features(records, graphs, walk_mus, &hists);
            write_feature_csv(table, (fs::path(walk_out) / "features.csv").string());
            fs::create_directories(fs::path(walk_out) / "histograms");
            for (std::size_t i = 0; i < records.size(); ++i)
                for (std::size_t mi = 0; mi < walk_mus.size(); ++mi)
                    write_histogram_csv(hists[i][mi],
                                        (fs::path(walk_out) / "histograms" /
                                         (records[i].id + "_mu" + std::to_string(walk_mus[mi]) +
                                          "_hist.csv"))
                                            .string());
            if (walk_structural) {
                FeatureTable st = structural_features_table(records, graphs);
                write_feature_csv(st, (fs::path(walk_out) / "structural.csv").string());
            }
            std::cout << "wrote features for " << records.size() << " graphs to " << walk_out
                      << "\n";
            return 0;
        }
        if (walk_graphs.empty())
            throw CLI::ValidationError("walk", "provide graph files or --dataset");
        std::ostringstream csv;
        bool header_written = false;
        for (const auto& path : walk_graphs) {
            LoadedGraph lg = load_graph(path);
            std::vector<JointHistogram> hists;
            for (int mu : walk_mus) {
                WalkerConfig cfg{mu, 0};
                auto outcomes = walk_all(lg.graph, cfg);
                hists.push_back(joint_histogram(outcomes));
                write_histogram_csv(hists.back(),
                                    (fs::path(walk_out) / (lg.id + "_mu" + std::to_string(mu) +
                                                           "_hist.csv"))
                                        .string());
                if (walk_trace) {
                    WalkContext ctx(lg.graph);
                    std::ostringstream traces;
                    std::vector<int> trace;
                    for (int s = 0; s < lg.graph.node_count(); ++s) {
                        tourist::walk(ctx, s, cfg, &trace);
                        for (std::size_t i = 0; i < trace.size(); ++i)
                            traces << (i ? " " : "") << trace[i];
                        traces << '\n';
                    }
                    write_text((fs::path(walk_out) / (lg.id + "_mu" + std::to_string(mu) +
                                                      ".trace"))
                                   .string(),
                               traces.str());
                }
            }
            SignatureVector sig = psi(hists, walk_mus, lg.graph.node_count());
            if (!header_written) {
                csv << "sample_id,label";
                for (const auto& entry : sig.layout)
                    csv << ",mu" << entry.mu << "_len" << entry.length;
                csv << '\n';
                header_written = true;
            }
            csv << lg.id << ",unknown";
            csv.precision(17);
            for (double v : sig.values) csv << ',' << v;
            csv << '\n';
        }
        write_text((fs::path(walk_out) / "signatures.csv").string(), csv.str());
        std::cout << "wrote signatures for " << walk_graphs.size() << " graph(s) to " << walk_out
                  << "\n";
        return 0;
    }

    if (cls->parsed()) {
        fs::create_directories(cls_out);
        FeatureTable table = read_feature_csv(cls_features);
        ClassifyOutput out = classify_features(table, cls_method, cls_ridge);
        write_text((fs::path(cls_out) / "report.json").string(), to_json(out.report).dump(2) + "\n");
        std::ostringstream conf;
        conf << "true_label,pred_regular,pred_random,pred_small_world\n";
        for (int t = 0; t < 3; ++t) {
            conf << to_string(static_cast<ClassLabel>(t));
            for (int p = 0; p < 3; ++p) conf << ',' << out.report.confusion[t][p];
            conf << '\n';
        }
        write_text((fs::path(cls_out) / "confusion.csv").string(), conf.str());
        std::ostringstream pca;
        pca << "sample_id,label,x,y\n";
        pca.precision(17);
        for (std::size_t i = 0; i < table.samples.size(); ++i)
            pca << table.samples[i].sample_id << ',' << to_string(table.samples[i].label) << ','
                << out.projection(static_cast<Eigen::Index>(i), 0) << ','
                << out.projection(static_cast<Eigen::Index>(i), 1) << '\n';
        write_text((fs::path(cls_out) / "pca.csv").string(), pca.str());
        std::cout << "accuracy " << out.report.accuracy_mean << " (+- " << out.report.accuracy_std
                  << ") over " << out.report.n_samples << " samples\n";
        return 0;
    }

    if (met->parsed()) {
        if (met_sweep) {
            auto rows = run_sweep(sweep_n, sweep_k, log_spaced(sweep_pmin, sweep_pmax, sweep_steps),
                                  sweep_mus, sweep_seeds, met_realizations, met_seed);
            if (met_out.empty()) throw CLI::ValidationError("metric", "--sweep requires --out");
            write_sweep_csv(rows, met_out);
            std::cout << "wrote " << rows.size() << " sweep rows to " << met_out << "\n";
            return 0;
        }
        if (met_graph.empty()) throw CLI::ValidationError("metric", "provide --graph or --sweep");
        LoadedGraph lg = load_graph(met_graph);
        WalkerConfig cfg{met_mu, 0};
        MetricsReport report = full_report(lg.graph, cfg, met_realizations, met_seed);
        const std::string body = to_json(report).dump(2) + "\n";
        if (met_out.empty())
            std::cout << body;
        else
            write_text(met_out, body);
        return 0;
    }

    if (bench->parsed()) {
        auto rows = run_bench(bench_sizes, bench_p, bench_mus, bench_repeats, bench_realizations,
                              bench_seed);
        write_bench_csv(rows, bench_out);
        std::cout << "wrote " << rows.size() << " timing rows to " << bench_out << "\n";
        return 0;
    }

    if (sum->parsed()) {
        ParsedGraph parsed = parse_edge_list_file(sum_graph);
        GraphSummary s = graph_summary(parsed.graph, parsed.document);
        nlohmann::json j{{"node_count", s.node_count},
                         {"edge_count", s.edge_count},
                         {"mean_degree", s.mean_degree},
                         {"clustering", s.clustering},
                         {"avg_path_largest_component", s.avg_path_largest_component},
                         {"path_degenerate", s.path_degenerate},
                         {"component_count", s.component_count},
                         {"raw_edge_count", s.raw_edge_count},
                         {"dropped_self_loops", s.dropped_self_loops},
                         {"dropped_duplicates", s.dropped_duplicates}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
