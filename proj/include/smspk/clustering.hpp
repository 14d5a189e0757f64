#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "smspk/kernel.hpp"

namespace smspk {

struct ClusterAssignment {
    std::vector<std::string> patients;
    std::vector<int> labels;
    int k = 0;
    double objective = 0.0;

    std::vector<int> cluster_sizes() const;
};

// Kernel k-means: per restart, assign points uniformly at random to k
// clusters, then alternate batch reassignment to the nearest centroid
// (squared feature-space distance expanded through the Gram matrix) until
// stable or the iteration cap. Ties go to the lowest cluster index; a cluster
// that empties is refilled with the point farthest from its own centroid.
// The best restart by (objective, restart index) wins.
ClusterAssignment kernel_kmeans(const KernelMatrix& k_matrix, int k, int restarts,
                                std::uint64_t seed, int max_iterations = 300);

// Single run from a caller-supplied assignment; objective_trace, when given,
// receives the objective after every iteration.
ClusterAssignment kernel_kmeans_from_assignment(const KernelMatrix& k_matrix,
                                                std::vector<int> initial, int k,
                                                int max_iterations = 300,
                                                std::vector<double>* objective_trace = nullptr);

// Mean silhouette width with kernel-induced distances
// d(i,j) = sqrt(max(0, K(i,i) - 2K(i,j) + K(j,j))). Points in singleton
// clusters score 0, as does any point with a = b = 0.
double kernel_silhouette(const KernelMatrix& k_matrix, const ClusterAssignment& a);

// Cluster TSV: header `patient	cluster`, clusters numbered from 0.
std::string clusters_to_tsv(const ClusterAssignment& a);
void write_clusters_tsv(const ClusterAssignment& a, const std::filesystem::path& path);
ClusterAssignment read_clusters_tsv(const std::filesystem::path& path);
ClusterAssignment parse_clusters_tsv(const std::string& text);

}  // namespace smspk
