#include "smspk/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "smspk/errors.hpp"
#include "smspk/kernel.hpp"
#include "smspk/rng.hpp"
#include "smspk/smoothing.hpp"
#include "smspk/text.hpp"

namespace smspk {

void SyntheticSpec::validate() const {
    if (groups < 2) throw ConfigError("synthetic cohort needs at least two groups");
    if (patients_per_group < 1) throw ConfigError("patients_per_group must be positive");
    if (p_in < 0.0 || p_in > 1.0) throw ConfigError("p_in must lie in [0,1]");
    if (p_out < 0.0 || p_out > 1.0) throw ConfigError("p_out must lie in [0,1]");
}

namespace {

std::string patient_id(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "P%04d", index);
    return buf;
}

}  // namespace

SyntheticCohort generate_cohort(const PathwayGraph& g, const ShortestPathSet& paths,
                                const SyntheticSpec& spec) {
    spec.validate();

    const int d = diameter(g);
    const int min_length = (d + 1) / 2;
    std::vector<const ShortestPath*> eligible;
    for (const auto& p : paths.paths)
        if (p.length() >= min_length && p.length() <= d) eligible.push_back(&p);
    if (static_cast<int>(eligible.size()) < spec.groups)
        throw DataError("pathway '" + g.id + "' has " + std::to_string(eligible.size()) +
                        " driver-eligible paths for " + std::to_string(spec.groups) +
                        " groups");

    std::mt19937_64 rng(spec.seed);

    // Partial Fisher-Yates: the first `groups` slots end up a uniform draw
    // without replacement.
    std::vector<std::size_t> order(eligible.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (int i = 0; i < spec.groups; ++i) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i),
                                                        order.size() - 1);
        std::swap(order[static_cast<std::size_t>(i)], order[pick(rng)]);
    }

    SyntheticCohort cohort;
    cohort.driver_paths.reserve(static_cast<std::size_t>(spec.groups));
    std::vector<std::vector<bool>> on_driver(static_cast<std::size_t>(spec.groups),
                                             std::vector<bool>(g.genes.size(), false));
    for (int c = 0; c < spec.groups; ++c) {
        const ShortestPath& driver = *eligible[order[static_cast<std::size_t>(c)]];
        cohort.driver_paths.push_back(driver);
        for (int v : driver.vertices)
            on_driver[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = true;
    }

    const int total = spec.groups * spec.patients_per_group;
    cohort.patients.reserve(static_cast<std::size_t>(total));
    cohort.true_group.reserve(static_cast<std::size_t>(total));
    cohort.labels = Eigen::MatrixXd::Zero(total, static_cast<Eigen::Index>(g.genes.size()));

    std::bernoulli_distribution draw_in(spec.p_in);
    std::bernoulli_distribution draw_out(spec.p_out);
    for (int i = 0; i < total; ++i) {
        const int group = i / spec.patients_per_group;
        cohort.patients.push_back(patient_id(i));
        cohort.true_group.push_back(group);
        const auto& driver = on_driver[static_cast<std::size_t>(group)];
        for (std::size_t v = 0; v < g.genes.size(); ++v) {
            const bool mutated = driver[v] ? draw_in(rng) : draw_out(rng);
            if (mutated) cohort.labels(i, static_cast<Eigen::Index>(v)) = 1.0;
        }
    }
    return cohort;
}

SyntheticCohort generate_cohort(const PathwayGraph& g, const SyntheticSpec& spec) {
    return generate_cohort(g, all_shortest_paths(g), spec);
}

double clustering_accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
    if (predicted.size() != truth.size())
        throw DataError("accuracy inputs have mismatched lengths");
    if (predicted.empty()) throw DataError("accuracy of an empty assignment is undefined");

    int m = 0;
    for (int label : predicted) {
        if (label < 0) throw DataError("negative cluster label");
        m = std::max(m, label + 1);
    }
    for (int label : truth) {
        if (label < 0) throw DataError("negative group label");
        m = std::max(m, label + 1);
    }
    if (m > 6) throw ConfigError("accuracy search is exhaustive; at most 6 clusters");

    // counts(p, t) = patients predicted in p whose true group is t.
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(m),
                                         std::vector<int>(static_cast<std::size_t>(m), 0));
    for (std::size_t i = 0; i < predicted.size(); ++i)
        ++counts[static_cast<std::size_t>(predicted[i])][static_cast<std::size_t>(truth[i])];

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int matched = 0;
        for (int p = 0; p < m; ++p)
            matched += counts[static_cast<std::size_t>(p)]
                             [static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
        best = std::max(best, matched);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(best) / static_cast<double>(predicted.size());
}

double clustering_accuracy(const ClusterAssignment& predicted, const std::vector<int>& truth) {
    return clustering_accuracy(predicted.labels, truth);
}

std::vector<SimulationRow> run_simulation_grid(const PathwayGraph& g,
                                               const std::vector<double>& p_in_values,
                                               const std::vector<double>& p_out_values,
                                               const std::vector<double>& alpha_values,
                                               const SimulationOptions& opts) {
    if (opts.repetitions < 1) throw ConfigError("repetitions must be positive");
    if (p_in_values.empty() || p_out_values.empty() || alpha_values.empty())
        throw ConfigError("simulation grid needs nonempty p_in, p_out, and alpha lists");

    const ShortestPathSet paths = all_shortest_paths(g);
    std::vector<SimulationRow> rows;
    std::uint64_t cell = 0;
    for (double p_in : p_in_values) {
        for (double p_out : p_out_values) {
            for (double alpha : alpha_values) {
                SmoothingConfig smoothing;
                smoothing.alpha = alpha;
                smoothing.tolerance = opts.tolerance;
                smoothing.max_iterations = opts.max_iterations;
                smoothing.validate();
                if (alpha == 1.0)
                    throw ConfigError("alpha = 1 drops the observed labels entirely");

                std::vector<double> accuracies;
                accuracies.reserve(static_cast<std::size_t>(opts.repetitions));
                for (int rep = 0; rep < opts.repetitions; ++rep) {
                    SyntheticSpec spec;
                    spec.groups = opts.groups;
                    spec.patients_per_group = opts.patients_per_group;
                    spec.p_in = p_in;
                    spec.p_out = p_out;
                    spec.seed = derive_seed(opts.seed, {cell, 2 * static_cast<std::uint64_t>(rep)});
                    const SyntheticCohort cohort = generate_cohort(g, paths, spec);
                    const KernelMatrix kernel =
                        pathway_kernel(g, paths, cohort.labels, cohort.patients, smoothing);
                    const ClusterAssignment assignment = kernel_kmeans(
                        kernel, opts.groups, opts.restarts,
                        derive_seed(opts.seed, {cell, 2 * static_cast<std::uint64_t>(rep) + 1}));
                    accuracies.push_back(clustering_accuracy(assignment, cohort.true_group));
                }

                SimulationRow row;
                row.p_in = p_in;
                row.p_out = p_out;
                row.alpha = alpha;
                row.repetitions = opts.repetitions;
                double sum = 0.0;
                for (double a : accuracies) sum += a;
                row.mean_accuracy = sum / static_cast<double>(accuracies.size());
                double ss = 0.0;
                for (double a : accuracies) {
                    const double delta = a - row.mean_accuracy;
                    ss += delta * delta;
                }
                row.sd_accuracy = accuracies.size() > 1
                                      ? std::sqrt(ss / static_cast<double>(accuracies.size() - 1))
                                      : 0.0;
                rows.push_back(row);
                ++cell;
            }
        }
    }
    return rows;
}

std::string simulation_to_csv(const std::vector<SimulationRow>& rows) {
    std::string out = "p_in,p_out,alpha,repetitions,mean_accuracy,sd_accuracy\n";
    for (const auto& row : rows) {
        out += format_g12(row.p_in);
        out += ',';
        out += format_g12(row.p_out);
        out += ',';
        out += format_g12(row.alpha);
        out += ',';
        out += std::to_string(row.repetitions);
        out += ',';
        out += format_g12(row.mean_accuracy);
        out += ',';
        out += format_g12(row.sd_accuracy);
        out += '\n';
    }
    return out;
}

void write_simulation_csv(const std::vector<SimulationRow>& rows,
                          const std::filesystem::path& path) {
    write_text_file(path, simulation_to_csv(rows));
}

}  // namespace smspk
