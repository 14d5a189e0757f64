#include "smspk/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <map>
#include <utility>

#include "smspk/errors.hpp"
#include "smspk/rng.hpp"
#include "smspk/shortest_paths.hpp"
#include "smspk/smoothing.hpp"
#include "smspk/text.hpp"

namespace smspk {

namespace {

constexpr std::uint64_t kScreenTag = 1;
constexpr std::uint64_t kFinalTag = 2;

std::uint64_t double_bits(double x) { return std::bit_cast<std::uint64_t>(x); }

SmoothingConfig smoothing_config(const PipelineConfig& cfg, double alpha) {
    SmoothingConfig smoothing;
    smoothing.alpha = alpha;
    smoothing.tolerance = cfg.tolerance;
    smoothing.max_iterations = cfg.max_iterations;
    return smoothing;
}

}  // namespace

void PipelineConfig::validate() const {
    if (k_values.empty()) throw ConfigError("no k values given");
    for (int k : k_values)
        if (k < 2 || k > 5)
            throw ConfigError("k must lie in {2,3,4,5}, got " + std::to_string(k));
    if (alpha_values.empty()) throw ConfigError("no alpha values given");
    for (double alpha : alpha_values) {
        if (alpha == 1.0) throw ConfigError("alpha = 1 drops the observed labels entirely");
        if (alpha < 0.0 || alpha > 1.0)
            throw ConfigError("alpha must lie in [0,1), got " + format_g12(alpha));
    }
    if (p_thresholds.empty()) throw ConfigError("no p-value thresholds given");
    for (double p : p_thresholds)
        if (p <= 0.0 || p >= 1.0)
            throw ConfigError("p-threshold must lie strictly between 0 and 1, got " +
                              format_g12(p));
    if (restarts <= 0) throw ConfigError("restarts must be positive");
    if (tolerance <= 0.0) throw ConfigError("tolerance must be positive");
    if (max_iterations <= 0) throw ConfigError("max_iterations must be positive");
}

std::vector<std::string> pipeline_cohort(const MutationCatalog& catalog,
                                         const SurvivalTable& clinical) {
    for (const auto& patient : catalog.patients)
        if (!clinical.find(patient))
            std::cerr << "warning: patient '" << patient
                      << "' has mutations but no clinical record; dropped\n";
    return clinical.patients_sorted();
}

std::vector<KernelMatrix> pathway_kernels(const std::vector<PathwayGraph>& pathways,
                                          const MutationCatalog& catalog,
                                          const std::vector<std::string>& cohort,
                                          double alpha, const PipelineConfig& cfg) {
    if (pathways.empty()) throw DataError("no pathways to screen");
    if (cohort.empty()) throw DataError("empty cohort");

    const SmoothingConfig smoothing = smoothing_config(cfg, alpha);
    std::vector<KernelMatrix> kernels;
    kernels.reserve(pathways.size());
    for (const auto& g : pathways) {
        const ShortestPathSet paths = all_shortest_paths(g);
        const Eigen::MatrixXd labels = label_matrix(catalog, cohort, g);
        kernels.push_back(
            cosine_normalize(pathway_kernel(g, paths, labels, cohort, smoothing)));
    }
    return kernels;
}

PathwayScreen screen_with_kernels(const std::vector<PathwayGraph>& pathways,
                                  const std::vector<KernelMatrix>& kernels,
                                  const SurvivalTable& clinical, int k, double alpha,
                                  const PipelineConfig& cfg) {
    if (pathways.size() != kernels.size())
        throw DataError("pathway and kernel lists have mismatched lengths");
    if (pathways.empty()) throw DataError("no pathways to screen");

    PathwayScreen screen;
    screen.kernels = kernels;
    screen.rows.reserve(pathways.size());
    for (std::size_t i = 0; i < pathways.size(); ++i) {
        ScreenRow row;
        row.pathway_id = pathways[i].id;
        const KernelMatrix& kernel = kernels[i];
        if (kernel.is_zero()) {
            row.degenerate = true;
        } else {
            // Cohort coverage was checked up front, so a log-rank rejection
            // here is a genuinely degenerate clustering for this pathway.
            // Seeded by pathway id, not list position, so a pathway screens
            // identically whatever else sits in the directory.
            try {
                const std::uint64_t seed =
                    derive_seed(cfg.seed, {kScreenTag, static_cast<std::uint64_t>(k),
                                           double_bits(alpha), hash_name(row.pathway_id)});
                const ClusterAssignment assignment =
                    kernel_kmeans(kernel, k, cfg.restarts, seed);
                row.p_value = logrank_test(clinical, assignment).p_value;
            } catch (const DataError&) {
                row.degenerate = true;
            }
        }
        screen.rows.push_back(std::move(row));
    }
    return screen;
}

PathwayScreen screen_pathways(const std::vector<PathwayGraph>& pathways,
                              const MutationCatalog& catalog,
                              const std::vector<std::string>& cohort,
                              const SurvivalTable& clinical, int k, double alpha,
                              const PipelineConfig& cfg) {
    for (const auto& patient : cohort)
        if (!clinical.find(patient))
            throw DataError("patient '" + patient + "' has no clinical record");
    return screen_with_kernels(pathways,
                               pathway_kernels(pathways, catalog, cohort, alpha, cfg),
                               clinical, k, alpha, cfg);
}

void apply_threshold(PathwayScreen& screen, double p_threshold) {
    for (auto& row : screen.rows) row.pass = !row.degenerate && row.p_value <= p_threshold;
}

FinalResult finalize(const PathwayScreen& screen, const SurvivalTable& clinical, int k,
                     double alpha, double p_threshold, const PipelineConfig& cfg) {
    std::vector<KernelMatrix> passing;
    for (std::size_t i = 0; i < screen.rows.size(); ++i)
        if (screen.rows[i].pass) passing.push_back(screen.kernels[i]);
    if (passing.empty())
        throw NoPathwayPassedError("no pathway passed the survival screen at threshold " +
                                   format_g12(p_threshold));

    FinalResult result;
    result.passing_count = static_cast<int>(passing.size());
    result.combined = combine_kernels(passing);
    const std::uint64_t seed =
        derive_seed(cfg.seed, {kFinalTag, static_cast<std::uint64_t>(k), double_bits(alpha),
                               double_bits(p_threshold)});
    result.assignment = kernel_kmeans(result.combined, k, cfg.restarts, seed);
    result.logrank = logrank_test(clinical, result.assignment);
    result.silhouette = kernel_silhouette(result.combined, result.assignment);
    return result;
}

bool SweepReport::any_cell_succeeded() const {
    return std::any_of(cells.begin(), cells.end(),
                       [](const SweepCell& cell) { return !cell.no_pass; });
}

namespace {

void write_cell_artifacts(const std::filesystem::path& cell_dir, const PathwayScreen& screen,
                          const FinalResult* result, const SurvivalTable& clinical,
                          const PipelineConfig& cfg) {
    std::filesystem::create_directories(cell_dir);
    write_text_file(cell_dir / "screen_report.tsv", screen_to_tsv(screen, cfg.bonferroni));
    if (!result) return;

    write_kernel_tsv(result->combined, cell_dir / "combined_kernel.tsv");
    write_clusters_tsv(result->assignment, cell_dir / "clusters.tsv");

    std::vector<KMCurve> curves;
    for (int c = 0; c < result->assignment.k; ++c) {
        std::vector<std::string> members;
        for (std::size_t i = 0; i < result->assignment.patients.size(); ++i)
            if (result->assignment.labels[i] == c)
                members.push_back(result->assignment.patients[i]);
        curves.push_back(kaplan_meier(clinical, members, std::to_string(c)));
    }
    write_km_csv(curves, cell_dir / "km_curves.csv");
}

}  // namespace

SweepReport run_sweep(const std::vector<PathwayGraph>& pathways,
                      const MutationCatalog& catalog, const SurvivalTable& clinical,
                      const PipelineConfig& cfg, const std::filesystem::path& out_dir) {
    cfg.validate();
    if (clinical.records.empty()) throw DataError("clinical table is empty");
    const std::vector<std::string> cohort = pipeline_cohort(catalog, clinical);
    std::filesystem::create_directories(out_dir);

    // Kernels depend on alpha only; share them across k and thresholds.
    std::map<std::uint64_t, std::vector<KernelMatrix>> kernel_cache;

    SweepReport report;
    for (int k : cfg.k_values) {
        for (double alpha : cfg.alpha_values) {
            auto cached = kernel_cache.find(double_bits(alpha));
            if (cached == kernel_cache.end())
                cached = kernel_cache
                             .emplace(double_bits(alpha),
                                      pathway_kernels(pathways, catalog, cohort, alpha, cfg))
                             .first;
            PathwayScreen screen =
                screen_with_kernels(pathways, cached->second, clinical, k, alpha, cfg);

            for (double p_threshold : cfg.p_thresholds) {
                apply_threshold(screen, p_threshold);
                SweepCell cell;
                cell.k = k;
                cell.alpha = alpha;
                cell.p_threshold = p_threshold;
                for (const auto& row : screen.rows)
                    if (row.pass) ++cell.passing_count;
                cell.directory = "k" + std::to_string(k) + "_alpha" + format_g12(alpha) +
                                 "_p" + format_g12(p_threshold);

                const std::filesystem::path cell_dir = out_dir / cell.directory;
                try {
                    const FinalResult result =
                        finalize(screen, clinical, k, alpha, p_threshold, cfg);
                    cell.logrank = result.logrank;
                    cell.silhouette = result.silhouette;
                    cell.cluster_sizes = result.assignment.cluster_sizes();
                    write_cell_artifacts(cell_dir, screen, &result, clinical, cfg);
                } catch (const NoPathwayPassedError&) {
                    cell.no_pass = true;
                    write_cell_artifacts(cell_dir, screen, nullptr, clinical, cfg);
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }

    for (int k : cfg.k_values) {
        SweepCell* best = nullptr;
        for (auto& cell : report.cells) {
            if (cell.k != k || cell.no_pass) continue;
            if (!best || cell.logrank.p_value < best->logrank.p_value ||
                (cell.logrank.p_value == best->logrank.p_value &&
                 cell.silhouette > best->silhouette))
                best = &cell;
        }
        if (best) best->best_for_k = true;
    }

    write_text_file(out_dir / "sweep_report.csv", sweep_to_csv(report));
    return report;
}

std::string screen_to_tsv(const PathwayScreen& screen, bool bonferroni) {
    std::string out = "pathway\tp_value\tdegenerate\tpass";
    if (bonferroni) out += "\tadjusted_p";
    out += '\n';
    const double n = static_cast<double>(screen.rows.size());
    for (const auto& row : screen.rows) {
        out += row.pathway_id;
        out += '\t';
        out += format_g12(row.p_value);
        out += '\t';
        out += row.degenerate ? '1' : '0';
        out += '\t';
        out += row.pass ? '1' : '0';
        if (bonferroni) {
            out += '\t';
            out += format_g12(std::min(1.0, row.p_value * n));
        }
        out += '\n';
    }
    return out;
}

std::string sweep_to_csv(const SweepReport& report) {
    std::string out =
        "k,alpha,p_threshold,n_pass,status,statistic,df,p_value,silhouette,"
        "cluster_sizes,best_for_k\n";
    for (const auto& cell : report.cells) {
        out += std::to_string(cell.k);
        out += ',';
        out += format_g12(cell.alpha);
        out += ',';
        out += format_g12(cell.p_threshold);
        out += ',';
        out += std::to_string(cell.passing_count);
        out += ',';
        if (cell.no_pass) {
            out += "no_pass,,,,,,0\n";
            continue;
        }
        out += "ok,";
        out += format_g12(cell.logrank.statistic);
        out += ',';
        out += std::to_string(cell.logrank.degrees_of_freedom);
        out += ',';
        out += format_g12(cell.logrank.p_value);
        out += ',';
        out += format_g12(cell.silhouette);
        out += ',';
        for (std::size_t i = 0; i < cell.cluster_sizes.size(); ++i) {
            if (i > 0) out += '|';
            out += std::to_string(cell.cluster_sizes[i]);
        }
        out += ',';
        out += cell.best_for_k ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace smspk
