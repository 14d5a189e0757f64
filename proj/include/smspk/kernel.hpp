#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "smspk/cohort.hpp"
#include "smspk/pathway.hpp"
#include "smspk/shortest_paths.hpp"
#include "smspk/smoothing.hpp"

namespace smspk {

// Patient-by-patient similarity on one pathway (or a combination of them).
struct KernelMatrix {
    std::vector<std::string> patients;
    Eigen::MatrixXd values;

    int size() const { return static_cast<int>(patients.size()); }
    bool is_zero() const { return values.isZero(0.0); }
};

// Concatenation over all canonical shortest paths of the smoothed restriction
// of each patient's labels to that path. Rows follow the label matrix; the
// column blocks follow the canonical path order.
Eigen::MatrixXd smoothed_feature_matrix(const Eigen::MatrixXd& labels,
                                        const ShortestPathSet& paths, double alpha);

// The smoothed shortest path kernel: K(i,j) = sum over paths of the dot
// product of the two patients' smoothed path profiles, computed as the Gram
// matrix of the feature matrix. A pathway with zero paths yields the zero
// kernel, which callers treat as degenerate.
KernelMatrix pathway_kernel(const PathwayGraph& g, const ShortestPathSet& paths,
                            const Eigen::MatrixXd& labels,
                            std::vector<std::string> patients,
                            const SmoothingConfig& cfg);

// K'(i,j) = K(i,j) / sqrt(K(i,i) K(j,j)); rows with zero self-similarity are
// zeroed out and keep a zero diagonal.
KernelMatrix cosine_normalize(const KernelMatrix& k);

// Uniform-weight combination: elementwise mean of already-normalized kernels,
// cosine-normalized once more.
KernelMatrix combine_kernels(const std::vector<KernelMatrix>& kernels);

struct PsdReport {
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    double symmetry_residual = 0.0;
    bool pass = false;
};

// pass iff min_eig >= -1e-8 * max(1, max_eig).
PsdReport check_psd(const Eigen::MatrixXd& k);
inline PsdReport check_psd(const KernelMatrix& k) { return check_psd(k.values); }

// Kernel TSV: first line is the tab-separated patient ids, then one matrix
// row per line, 12 significant digits.
std::string kernel_to_tsv(const KernelMatrix& k);
void write_kernel_tsv(const KernelMatrix& k, const std::filesystem::path& path);
KernelMatrix read_kernel_tsv(const std::filesystem::path& path);
KernelMatrix parse_kernel_tsv(const std::string& text);

}  // namespace smspk
