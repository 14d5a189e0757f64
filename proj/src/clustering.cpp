#include "smspk/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "smspk/errors.hpp"
#include "smspk/rng.hpp"
#include "smspk/text.hpp"

namespace smspk {

std::vector<int> ClusterAssignment::cluster_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int label : labels) ++sizes[static_cast<std::size_t>(label)];
    return sizes;
}

namespace {

struct ClusterStats {
    Eigen::MatrixXd point_to_sum;  // n x k, Σ_{j in c} K(i,j)
    Eigen::VectorXd within;        // Σ_{j,l in c} K(j,l)
    Eigen::VectorXi sizes;
};

ClusterStats compute_stats(const Eigen::MatrixXd& k_values, const std::vector<int>& labels,
                           int k) {
    const auto n = k_values.rows();
    Eigen::MatrixXd indicator = Eigen::MatrixXd::Zero(n, k);
    for (Eigen::Index i = 0; i < n; ++i)
        indicator(i, labels[static_cast<std::size_t>(i)]) = 1.0;

    ClusterStats stats;
    stats.point_to_sum = k_values * indicator;
    stats.within = (indicator.transpose() * stats.point_to_sum).diagonal();
    stats.sizes = indicator.colwise().sum().cast<int>();
    return stats;
}

double point_distance(const Eigen::MatrixXd& k_values, const ClusterStats& stats,
                      Eigen::Index i, int c) {
    const double size = static_cast<double>(stats.sizes(c));
    return k_values(i, i) - 2.0 * stats.point_to_sum(i, c) / size +
           stats.within(c) / (size * size);
}

// Refill empty clusters with the point farthest from its own centroid, drawn
// from clusters that can spare one. Each move fills one empty cluster, so
// this terminates in at most k steps.
void repair_empty_clusters(const Eigen::MatrixXd& k_values, std::vector<int>& labels, int k) {
    for (;;) {
        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        for (int label : labels) ++sizes[static_cast<std::size_t>(label)];
        int empty = -1;
        for (int c = 0; c < k; ++c)
            if (sizes[static_cast<std::size_t>(c)] == 0) {
                empty = c;
                break;
            }
        if (empty < 0) return;

        const ClusterStats stats = compute_stats(k_values, labels, k);
        Eigen::Index worst = -1;
        double worst_distance = -std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < k_values.rows(); ++i) {
            const int own = labels[static_cast<std::size_t>(i)];
            if (sizes[static_cast<std::size_t>(own)] < 2) continue;
            const double d = point_distance(k_values, stats, i, own);
            if (d > worst_distance) {
                worst_distance = d;
                worst = i;
            }
        }
        labels[static_cast<std::size_t>(worst)] = empty;
    }
}

double assignment_objective(const Eigen::MatrixXd& k_values, const std::vector<int>& labels,
                            int k) {
    const ClusterStats stats = compute_stats(k_values, labels, k);
    double objective = 0.0;
    for (Eigen::Index i = 0; i < k_values.rows(); ++i)
        objective +=
            std::max(0.0, point_distance(k_values, stats, i, labels[static_cast<std::size_t>(i)]));
    return objective;
}

}  // namespace

ClusterAssignment kernel_kmeans_from_assignment(const KernelMatrix& k_matrix,
                                                std::vector<int> initial, int k,
                                                int max_iterations,
                                                std::vector<double>* objective_trace) {
    const Eigen::MatrixXd& k_values = k_matrix.values;
    const auto n = k_values.rows();
    if (k_values.cols() != n) throw DataError("kernel matrix is not square");
    if (k <= 0) throw ConfigError("k must be positive");
    if (k > n) throw ConfigError("k exceeds the number of patients");
    if (static_cast<Eigen::Index>(initial.size()) != n)
        throw ConfigError("initial assignment length does not match the kernel");
    for (int label : initial)
        if (label < 0 || label >= k) throw ConfigError("initial assignment label out of range");
    if (max_iterations <= 0) throw ConfigError("max_iterations must be positive");

    std::vector<int> labels = std::move(initial);
    repair_empty_clusters(k_values, labels, k);
    if (objective_trace) {
        objective_trace->clear();
        objective_trace->push_back(assignment_objective(k_values, labels, k));
    }

    for (int iteration = 0; iteration < max_iterations; ++iteration) {
        const ClusterStats stats = compute_stats(k_values, labels, k);
        std::vector<int> next(labels.size());
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_distance = point_distance(k_values, stats, i, 0);
            for (int c = 1; c < k; ++c) {
                const double d = point_distance(k_values, stats, i, c);
                if (d < best_distance) {
                    best_distance = d;
                    best = c;
                }
            }
            next[static_cast<std::size_t>(i)] = best;
        }
        repair_empty_clusters(k_values, next, k);
        if (objective_trace) objective_trace->push_back(assignment_objective(k_values, next, k));
        const bool stable = next == labels;
        labels = std::move(next);
        if (stable) break;
    }

    ClusterAssignment result;
    result.patients = k_matrix.patients;
    result.labels = std::move(labels);
    result.k = k;
    result.objective = assignment_objective(k_values, result.labels, k);
    return result;
}

ClusterAssignment kernel_kmeans(const KernelMatrix& k_matrix, int k, int restarts,
                                std::uint64_t seed, int max_iterations) {
    if (restarts <= 0) throw ConfigError("restarts must be positive");
    const auto n = k_matrix.values.rows();
    if (k <= 0) throw ConfigError("k must be positive");
    if (k > n) throw ConfigError("k exceeds the number of patients");

    ClusterAssignment best;
    bool have_best = false;
    for (int restart = 0; restart < restarts; ++restart) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
        std::uniform_int_distribution<int> pick(0, k - 1);
        std::vector<int> initial(static_cast<std::size_t>(n));
        for (auto& label : initial) label = pick(rng);

        ClusterAssignment run =
            kernel_kmeans_from_assignment(k_matrix, std::move(initial), k, max_iterations);
        if (!have_best || run.objective < best.objective) {
            best = std::move(run);
            have_best = true;
        }
    }
    return best;
}

double kernel_silhouette(const KernelMatrix& k_matrix, const ClusterAssignment& a) {
    const Eigen::MatrixXd& k_values = k_matrix.values;
    const auto n = k_values.rows();
    if (k_values.cols() != n) throw DataError("kernel matrix is not square");
    if (a.k < 2) throw ConfigError("silhouette needs at least two clusters");
    if (static_cast<Eigen::Index>(a.labels.size()) != n)
        throw DataError("assignment length does not match the kernel");

    const std::vector<int> sizes = a.cluster_sizes();
    for (int c = 0; c < a.k; ++c)
        if (sizes[static_cast<std::size_t>(c)] == 0)
            throw DataError("silhouette needs every cluster non-empty");

    Eigen::MatrixXd distance(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        distance(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double squared = k_values(i, i) - 2.0 * k_values(i, j) + k_values(j, j);
            const double d = std::sqrt(std::max(0.0, squared));
            distance(i, j) = d;
            distance(j, i) = d;
        }
    }

    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const int own = a.labels[static_cast<std::size_t>(i)];
        if (sizes[static_cast<std::size_t>(own)] == 1) continue;  // contributes 0

        Eigen::VectorXd cluster_mean = Eigen::VectorXd::Zero(a.k);
        for (Eigen::Index j = 0; j < n; ++j)
            cluster_mean(a.labels[static_cast<std::size_t>(j)]) += distance(i, j);
        const double cohesion =
            cluster_mean(own) / static_cast<double>(sizes[static_cast<std::size_t>(own)] - 1);
        double separation = std::numeric_limits<double>::infinity();
        for (int c = 0; c < a.k; ++c) {
            if (c == own) continue;
            separation = std::min(
                separation, cluster_mean(c) / static_cast<double>(sizes[static_cast<std::size_t>(c)]));
        }
        const double denom = std::max(cohesion, separation);
        if (denom > 0.0) total += (separation - cohesion) / denom;
    }
    return total / static_cast<double>(n);
}

std::string clusters_to_tsv(const ClusterAssignment& a) {
    std::string out = "patient\tcluster\n";
    for (std::size_t i = 0; i < a.patients.size(); ++i) {
        out += a.patients[i];
        out += '\t';
        out += std::to_string(a.labels[i]);
        out += '\n';
    }
    return out;
}

void write_clusters_tsv(const ClusterAssignment& a, const std::filesystem::path& path) {
    write_text_file(path, clusters_to_tsv(a));
}

ClusterAssignment parse_clusters_tsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty cluster file", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "patient\tcluster")
        throw ParseError("expected header 'patient\tcluster'", 1);

    ClusterAssignment a;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line, '\t');
        if (fields.size() != 2)
            throw ParseError("cluster row needs: patient<TAB>cluster", line_no);
        const long cluster = parse_long(fields[1], line_no);
        if (cluster < 0) throw ParseError("cluster index is negative", line_no);
        a.patients.push_back(fields[0]);
        a.labels.push_back(static_cast<int>(cluster));
        a.k = std::max(a.k, static_cast<int>(cluster) + 1);
    }
    if (a.patients.empty()) throw ParseError("cluster file has no rows", line_no);
    return a;
}

ClusterAssignment read_clusters_tsv(const std::filesystem::path& path) {
    try {
        return parse_clusters_tsv(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

}  // namespace smspk
