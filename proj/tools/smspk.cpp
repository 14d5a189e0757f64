// Command line front end: parse, kernel, cluster, survival, pipeline,
// simulate. Exit codes: 0 ok, 1 usage or config error, 2 data error,
// 3 no pathway passed the screen.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "smspk/clustering.hpp"
#include "smspk/cohort.hpp"
#include "smspk/errors.hpp"
#include "smspk/kernel.hpp"
#include "smspk/pathway.hpp"
#include "smspk/pipeline.hpp"
#include "smspk/shortest_paths.hpp"
#include "smspk/smoothing.hpp"
#include "smspk/survival.hpp"
#include "smspk/synthetic.hpp"
#include "smspk/text.hpp"

namespace fs = std::filesystem;

namespace {

int run_parse(const std::string& pathway_dir, const std::string& out_dir) {
    const auto pathways = smspk::load_pathway_set(pathway_dir);
    fs::create_directories(out_dir);
    for (const auto& g : pathways) {
        smspk::write_pathway_file(g, fs::path(out_dir) / (g.id + ".pathway"));
        std::cout << g.id << '\t' << g.vertex_count() << '\t' << g.edge_count() << '\n';
    }
    std::cout << "wrote " << pathways.size() << " pathways to " << out_dir << '\n';
    return 0;
}

int run_kernel(const std::string& pathway_dir, const std::string& mutations_file,
               double alpha, const std::string& out_dir) {
    smspk::SmoothingConfig cfg;
    cfg.alpha = alpha;
    cfg.validate();
    if (alpha == 1.0) throw smspk::ConfigError("alpha = 1 drops the observed labels entirely");

    const auto pathways = smspk::load_pathway_set(pathway_dir);
    const auto catalog = smspk::load_mutations_file(mutations_file);
    if (catalog.patients.empty()) throw smspk::DataError("mutation table has no patients");

    fs::create_directories(out_dir);
    for (const auto& g : pathways) {
        const auto paths = smspk::all_shortest_paths(g);
        const auto labels = smspk::label_matrix(catalog, catalog.patients, g);
        const auto kernel = smspk::pathway_kernel(g, paths, labels, catalog.patients, cfg);
        smspk::write_kernel_tsv(kernel, fs::path(out_dir) / (g.id + ".kernel.tsv"));
        std::cout << g.id << '\t' << paths.count() << " paths\n";
    }
    std::cout << "wrote " << pathways.size() << " kernels to " << out_dir << '\n';
    return 0;
}

int run_cluster(const std::string& kernel_file, int k, int restarts, std::uint64_t seed,
                const std::string& out_file) {
    const auto kernel = smspk::read_kernel_tsv(kernel_file);
    const auto assignment = smspk::kernel_kmeans(kernel, k, restarts, seed);
    smspk::write_clusters_tsv(assignment, out_file);
    std::cout << "objective\t" << smspk::format_g12(assignment.objective) << '\n';
    const auto sizes = assignment.cluster_sizes();
    std::cout << "sizes\t";
    for (std::size_t i = 0; i < sizes.size(); ++i)
        std::cout << (i > 0 ? "|" : "") << sizes[i];
    std::cout << '\n';
    return 0;
}

int run_survival(const std::string& clinical_file, const std::string& clusters_file,
                 const std::string& km_out) {
    const auto clinical = smspk::load_clinical_file(clinical_file);
    const auto assignment = smspk::read_clusters_tsv(clusters_file);
    const auto result = smspk::logrank_test(clinical, assignment);
    std::cout << "statistic\t" << smspk::format_g12(result.statistic) << '\n';
    std::cout << "df\t" << result.degrees_of_freedom << '\n';
    std::cout << "p_value\t" << smspk::format_g12(result.p_value) << '\n';

    if (!km_out.empty()) {
        std::vector<smspk::KMCurve> curves;
        for (int c = 0; c < assignment.k; ++c) {
            std::vector<std::string> members;
            for (std::size_t i = 0; i < assignment.patients.size(); ++i)
                if (assignment.labels[i] == c) members.push_back(assignment.patients[i]);
            curves.push_back(smspk::kaplan_meier(clinical, members, std::to_string(c)));
        }
        smspk::write_km_csv(curves, km_out);
    }
    return 0;
}

int run_pipeline(const std::string& pathway_dir, const std::string& mutations_file,
                 const std::string& clinical_file, const smspk::PipelineConfig& cfg,
                 const std::string& out_dir) {
    cfg.validate();
    const auto pathways = smspk::load_pathway_set(pathway_dir);
    const auto catalog = smspk::load_mutations_file(mutations_file);
    const auto clinical = smspk::load_clinical_file(clinical_file);

    const auto report = smspk::run_sweep(pathways, catalog, clinical, cfg, out_dir);
    for (const auto& cell : report.cells) {
        std::cout << "k=" << cell.k << " alpha=" << smspk::format_g12(cell.alpha)
                  << " p_threshold=" << smspk::format_g12(cell.p_threshold)
                  << " n_pass=" << cell.passing_count;
        if (cell.no_pass) {
            std::cout << " no_pass\n";
            continue;
        }
        std::cout << " p_value=" << smspk::format_g12(cell.logrank.p_value)
                  << " silhouette=" << smspk::format_g12(cell.silhouette);
        if (cell.best_for_k) std::cout << " best_for_k";
        std::cout << '\n';
    }
    if (!report.any_cell_succeeded())
        throw smspk::NoPathwayPassedError("no pathway passed the screen in any sweep cell");
    std::cout << "report written to " << (fs::path(out_dir) / "sweep_report.csv").string()
              << '\n';
    return 0;
}

int run_simulate(const std::string& pathway_file, const std::vector<double>& p_in,
                 const std::vector<double>& p_out, const std::vector<double>& alpha,
                 const smspk::SimulationOptions& opts, const std::string& out_file) {
    const auto g = smspk::load_pathway_file(pathway_file);
    const auto rows = smspk::run_simulation_grid(g, p_in, p_out, alpha, opts);
    smspk::write_simulation_csv(rows, out_file);
    std::cout << "wrote " << rows.size() << " rows to " << out_file << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smoothed shortest path kernel patient stratification"};
    app.require_subcommand(1);

    std::string pathway_dir;
    std::string pathway_file;
    std::string mutations_file;
    std::string clinical_file;
    std::string kernel_file;
    std::string clusters_file;
    std::string out_path;
    std::string km_out;
    double alpha = 0.4;
    int k = 3;
    smspk::PipelineConfig pipeline_cfg;
    smspk::SimulationOptions sim_opts;
    std::vector<double> p_in_values;
    std::vector<double> p_out_values;
    std::vector<double> alpha_values;

    auto* parse_cmd = app.add_subcommand("parse", "validate and normalize pathway files");
    parse_cmd->add_option("--pathways", pathway_dir, "pathway directory")->required();
    parse_cmd->add_option("--out", out_path, "output directory")->required();

    auto* kernel_cmd = app.add_subcommand("kernel", "per-pathway kernel matrices");
    kernel_cmd->add_option("--pathways", pathway_dir, "pathway directory")->required();
    kernel_cmd->add_option("--mutations", mutations_file, "mutation TSV")->required();
    kernel_cmd->add_option("--alpha", alpha, "smoothing weight in [0,1)")->required();
    kernel_cmd->add_option("--out", out_path, "output directory")->required();

    auto* cluster_cmd = app.add_subcommand("cluster", "kernel k-means on a kernel TSV");
    int cluster_restarts = 100;
    std::uint64_t cluster_seed = 0;
    cluster_cmd->add_option("--kernel", kernel_file, "kernel TSV")->required();
    cluster_cmd->add_option("--k", k, "number of clusters")->required();
    cluster_cmd->add_option("--restarts", cluster_restarts, "random restarts");
    cluster_cmd->add_option("--seed", cluster_seed, "random seed");
    cluster_cmd->add_option("--out", out_path, "cluster TSV to write")->required();

    auto* survival_cmd = app.add_subcommand("survival", "log-rank test over clusters");
    survival_cmd->add_option("--clinical", clinical_file, "clinical TSV")->required();
    survival_cmd->add_option("--clusters", clusters_file, "cluster TSV")->required();
    survival_cmd->add_option("--km-out", km_out, "Kaplan-Meier CSV to write");

    auto* pipeline_cmd = app.add_subcommand("pipeline", "screen, combine, cluster, evaluate");
    pipeline_cmd->add_option("--pathways", pathway_dir, "pathway directory")->required();
    pipeline_cmd->add_option("--mutations", mutations_file, "mutation TSV")->required();
    pipeline_cmd->add_option("--clinical", clinical_file, "clinical TSV")->required();
    pipeline_cmd->add_option("--k", pipeline_cfg.k_values, "cluster counts")
        ->delimiter(',')
        ->capture_default_str();
    pipeline_cmd->add_option("--alpha", pipeline_cfg.alpha_values, "smoothing weights")
        ->delimiter(',')
        ->capture_default_str();
    pipeline_cmd->add_option("--p-threshold", pipeline_cfg.p_thresholds, "screen thresholds")
        ->delimiter(',')
        ->capture_default_str();
    pipeline_cmd->add_option("--restarts", pipeline_cfg.restarts, "k-means restarts")
        ->capture_default_str();
    pipeline_cmd->add_option("--seed", pipeline_cfg.seed, "random seed");
    pipeline_cmd->add_option("--tolerance", pipeline_cfg.tolerance, "smoothing tolerance");
    pipeline_cmd->add_option("--max-iterations", pipeline_cfg.max_iterations,
                             "smoothing iteration cap");
    pipeline_cmd->add_flag("--bonferroni", pipeline_cfg.bonferroni,
                           "add adjusted p-values to screen reports");
    pipeline_cmd->add_option("--out", out_path, "output directory")->required();
    pipeline_cmd->set_config("--config", "", "key = value config file");

    auto* simulate_cmd = app.add_subcommand("simulate", "synthetic accuracy grid");
    simulate_cmd->add_option("--pathway", pathway_file, "pathway file")->required();
    simulate_cmd->add_option("--p-in", p_in_values, "driver mutation probabilities")
        ->delimiter(',')
        ->required();
    simulate_cmd->add_option("--p-out", p_out_values, "background mutation probabilities")
        ->delimiter(',')
        ->required();
    simulate_cmd->add_option("--alpha", alpha_values, "smoothing weights")
        ->delimiter(',')
        ->required();
    simulate_cmd->add_option("--reps", sim_opts.repetitions, "repetitions per cell")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", sim_opts.seed, "random seed");
    simulate_cmd->add_option("--groups", sim_opts.groups, "planted groups")
        ->capture_default_str();
    simulate_cmd
        ->add_option("--patients-per-group", sim_opts.patients_per_group, "cohort size per group")
        ->capture_default_str();
    simulate_cmd->add_option("--restarts", sim_opts.restarts, "k-means restarts")
        ->capture_default_str();
    simulate_cmd->add_option("--out", out_path, "result CSV")->required();
    simulate_cmd->set_config("--config", "", "key = value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (parse_cmd->parsed()) return run_parse(pathway_dir, out_path);
        if (kernel_cmd->parsed()) return run_kernel(pathway_dir, mutations_file, alpha, out_path);
        if (cluster_cmd->parsed())
            return run_cluster(kernel_file, k, cluster_restarts, cluster_seed, out_path);
        if (survival_cmd->parsed()) return run_survival(clinical_file, clusters_file, km_out);
        if (pipeline_cmd->parsed())
            return run_pipeline(pathway_dir, mutations_file, clinical_file, pipeline_cfg,
                                out_path);
        if (simulate_cmd->parsed())
            return run_simulate(pathway_file, p_in_values, p_out_values, alpha_values, sim_opts,
                                out_path);
    } catch (const smspk::NoPathwayPassedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const smspk::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const smspk::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
