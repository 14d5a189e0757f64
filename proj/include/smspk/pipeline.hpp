#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "smspk/clustering.hpp"
#include "smspk/cohort.hpp"
#include "smspk/kernel.hpp"
#include "smspk/pathway.hpp"
#include "smspk/survival.hpp"

namespace smspk {

struct PipelineConfig {
    std::vector<int> k_values{2, 3, 4, 5};
    std::vector<double> alpha_values{0.4};
    std::vector<double> p_thresholds{0.05};
    int restarts = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
    int max_iterations = 1000;
    bool bonferroni = false;

    void validate() const;
};

struct ScreenRow {
    std::string pathway_id;
    double p_value = 1.0;
    bool degenerate = false;
    bool pass = false;
};

// Screen outcome at one (k, alpha): per-pathway log-rank p-values plus the
// cosine-normalized kernels, kept so threshold changes need no recompute.
struct PathwayScreen {
    std::vector<ScreenRow> rows;
    std::vector<KernelMatrix> kernels;
};

// The cohort the pipeline clusters: clinical patients in sorted order.
// Patients with mutations but no clinical record are dropped with a warning.
std::vector<std::string> pipeline_cohort(const MutationCatalog& catalog,
                                         const SurvivalTable& clinical);

// Cosine-normalized per-pathway kernels for one alpha, in pathway order.
std::vector<KernelMatrix> pathway_kernels(const std::vector<PathwayGraph>& pathways,
                                          const MutationCatalog& catalog,
                                          const std::vector<std::string>& cohort,
                                          double alpha, const PipelineConfig& cfg);

// Cluster each pathway's kernel at k and record the log-rank p-value across
// the resulting clusters. Zero kernels, and clusterings the log-rank test
// rejects, are marked degenerate. Pass flags are left unset; see
// apply_threshold.
PathwayScreen screen_with_kernels(const std::vector<PathwayGraph>& pathways,
                                  const std::vector<KernelMatrix>& kernels,
                                  const SurvivalTable& clinical, int k, double alpha,
                                  const PipelineConfig& cfg);

PathwayScreen screen_pathways(const std::vector<PathwayGraph>& pathways,
                              const MutationCatalog& catalog,
                              const std::vector<std::string>& cohort,
                              const SurvivalTable& clinical, int k, double alpha,
                              const PipelineConfig& cfg);

// pass iff p_value <= p_threshold and not degenerate.
void apply_threshold(PathwayScreen& screen, double p_threshold);

struct FinalResult {
    ClusterAssignment assignment;
    LogRankResult logrank;
    double silhouette = 0.0;
    KernelMatrix combined;
    int passing_count = 0;
};

// Combine the passing kernels, cluster the combination, evaluate survival
// separation and silhouette. Throws NoPathwayPassedError when nothing passed.
FinalResult finalize(const PathwayScreen& screen, const SurvivalTable& clinical, int k,
                     double alpha, double p_threshold, const PipelineConfig& cfg);

struct SweepCell {
    int k = 0;
    double alpha = 0.0;
    double p_threshold = 0.0;
    int passing_count = 0;
    bool no_pass = false;
    LogRankResult logrank;
    double silhouette = 0.0;
    std::vector<int> cluster_sizes;
    std::string directory;
    bool best_for_k = false;
};

struct SweepReport {
    std::vector<SweepCell> cells;

    bool any_cell_succeeded() const;
};

// Full (k, alpha, p_threshold) cross-product. Kernels are computed once per
// alpha and screens once per (k, alpha); every cell writes its artifacts to
// its own subdirectory of out_dir, and the report lands in sweep_report.csv.
// The best cell per k has the lowest final p-value, ties broken by higher
// silhouette, then grid order.
SweepReport run_sweep(const std::vector<PathwayGraph>& pathways,
                      const MutationCatalog& catalog, const SurvivalTable& clinical,
                      const PipelineConfig& cfg, const std::filesystem::path& out_dir);

std::string screen_to_tsv(const PathwayScreen& screen, bool bonferroni);
std::string sweep_to_csv(const SweepReport& report);

}  // namespace smspk
