#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "smspk/clustering.hpp"
#include "smspk/pathway.hpp"
#include "smspk/shortest_paths.hpp"

namespace smspk {

struct SyntheticSpec {
    int groups = 3;
    int patients_per_group = 200;
    double p_in = 0.8;
    double p_out = 0.05;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SyntheticCohort {
    std::vector<std::string> patients;
    Eigen::MatrixXd labels;  // patients x pathway genes, 0/1
    std::vector<int> true_group;
    std::vector<ShortestPath> driver_paths;  // one per group
};

// Each group gets a distinct driver path, drawn uniformly without replacement
// from the canonical paths whose length lies in [ceil(D/2), D] for pathway
// diameter D. A patient mutates each driver-path gene with probability p_in
// and every other pathway gene with probability p_out.
SyntheticCohort generate_cohort(const PathwayGraph& g, const ShortestPathSet& paths,
                                const SyntheticSpec& spec);
SyntheticCohort generate_cohort(const PathwayGraph& g, const SyntheticSpec& spec);

// Best agreement over all bijections between predicted clusters and true
// groups; exhaustive, so no more than 6 clusters.
double clustering_accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);
double clustering_accuracy(const ClusterAssignment& predicted, const std::vector<int>& truth);

struct SimulationOptions {
    int groups = 3;
    int patients_per_group = 200;
    int repetitions = 100;
    std::uint64_t seed = 0;
    int restarts = 10;
    double tolerance = 1e-6;
    int max_iterations = 1000;
};

struct SimulationRow {
    double p_in = 0.0;
    double p_out = 0.0;
    double alpha = 0.0;
    int repetitions = 0;
    double mean_accuracy = 0.0;
    double sd_accuracy = 0.0;
};

// Full (p_in, p_out, alpha) grid in input order: per repetition, generate a
// cohort, build the smoothed kernel, cluster at k = groups, and score
// accuracy against the planted groups.
std::vector<SimulationRow> run_simulation_grid(const PathwayGraph& g,
                                               const std::vector<double>& p_in_values,
                                               const std::vector<double>& p_out_values,
                                               const std::vector<double>& alpha_values,
                                               const SimulationOptions& opts);

// Plot-ready CSV: header `p_in,p_out,alpha,repetitions,mean_accuracy,sd_accuracy`.
std::string simulation_to_csv(const std::vector<SimulationRow>& rows);
void write_simulation_csv(const std::vector<SimulationRow>& rows,
                          const std::filesystem::path& path);

}  // namespace smspk
