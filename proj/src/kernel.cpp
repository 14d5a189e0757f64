#include "smspk/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "smspk/errors.hpp"
#include "smspk/text.hpp"

namespace smspk {

Eigen::MatrixXd smoothed_feature_matrix(const Eigen::MatrixXd& labels,
                                        const ShortestPathSet& paths, double alpha) {
    const Eigen::Index n = labels.rows();
    Eigen::Index total_cols = 0;
    for (const auto& p : paths.paths) total_cols += static_cast<Eigen::Index>(p.vertices.size());

    Eigen::MatrixXd phi(n, total_cols);
    // One propagation operator per distinct path length; paths on the same
    // chain shape share it.
    std::map<int, Eigen::MatrixXd> operators;

    Eigen::Index col = 0;
    for (const auto& p : paths.paths) {
        const auto m = static_cast<Eigen::Index>(p.vertices.size());
        Eigen::MatrixXd restricted(n, m);
        for (Eigen::Index j = 0; j < m; ++j) restricted.col(j) = labels.col(p.vertices[j]);
        if (alpha == 0.0) {
            phi.block(0, col, n, m) = restricted;
        } else {
            auto it = operators.find(static_cast<int>(m));
            if (it == operators.end())
                it = operators.emplace(static_cast<int>(m),
                                       chain_propagation_operator(static_cast<int>(m), alpha))
                         .first;
            phi.block(0, col, n, m) = restricted * it->second;
        }
        col += m;
    }
    return phi;
}

namespace {

// The Gram matrix of the feature map factors through the vertex pairs:
// K = Phi Phi' = sum_p L_p (B B') L_p' = L W L', with W accumulating each
// path's B B' over the vertex positions it visits. W is patient-independent,
// so the patient-count-squared work happens once instead of once per path.
Eigen::MatrixXd pair_weight_matrix(Eigen::Index vertex_count, const ShortestPathSet& paths,
                                   double alpha) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(vertex_count, vertex_count);
    std::map<int, Eigen::MatrixXd> grams;  // per path length, B B'
    for (const auto& p : paths.paths) {
        const int m = static_cast<int>(p.vertices.size());
        auto it = grams.find(m);
        if (it == grams.end()) {
            Eigen::MatrixXd gram;
            if (alpha == 0.0) {
                gram = Eigen::MatrixXd::Identity(m, m);
            } else {
                const Eigen::MatrixXd b = chain_propagation_operator(m, alpha);
                gram = b * b.transpose();
            }
            it = grams.emplace(m, std::move(gram)).first;
        }
        const Eigen::MatrixXd& gram = it->second;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                w(p.vertices[static_cast<std::size_t>(a)],
                  p.vertices[static_cast<std::size_t>(b)]) += gram(a, b);
    }
    return w;
}

}  // namespace

KernelMatrix pathway_kernel(const PathwayGraph& g, const ShortestPathSet& paths,
                            const Eigen::MatrixXd& labels,
                            std::vector<std::string> patients,
                            const SmoothingConfig& cfg) {
    cfg.validate();
    if (labels.rows() != static_cast<Eigen::Index>(patients.size()))
        throw DataError("label matrix has " + std::to_string(labels.rows()) +
                        " rows for " + std::to_string(patients.size()) + " patients");
    if (labels.cols() != g.vertex_count())
        throw DataError("label matrix has " + std::to_string(labels.cols()) +
                        " columns for pathway '" + g.id + "' with " +
                        std::to_string(g.vertex_count()) + " genes");

    KernelMatrix k;
    k.patients = std::move(patients);
    const auto n = static_cast<Eigen::Index>(k.patients.size());
    if (paths.paths.empty()) {
        k.values = Eigen::MatrixXd::Zero(n, n);
        return k;
    }

    const Eigen::MatrixXd w = pair_weight_matrix(labels.cols(), paths, cfg.alpha);
    Eigen::MatrixXd projected(n, w.rows());
    projected.noalias() = labels * w;
    k.values.resize(n, n);
    k.values.noalias() = projected * labels.transpose();
    k.values.triangularView<Eigen::StrictlyUpper>() =
        k.values.triangularView<Eigen::StrictlyLower>().transpose();
    return k;
}

KernelMatrix cosine_normalize(const KernelMatrix& k) {
    const Eigen::Index n = k.values.rows();
    if (n != k.values.cols()) throw DataError("kernel matrix is not square");

    KernelMatrix out;
    out.patients = k.patients;
    out.values = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd inv_norm(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = k.values(i, i);
        inv_norm(i) = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
    }
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            out.values(i, j) = k.values(i, j) * inv_norm(i) * inv_norm(j);
    // Unit diagonal wherever the patient has any signal at all.
    for (Eigen::Index i = 0; i < n; ++i)
        if (k.values(i, i) > 0.0) out.values(i, i) = 1.0;
    return out;
}

KernelMatrix combine_kernels(const std::vector<KernelMatrix>& kernels) {
    if (kernels.empty()) throw DataError("no kernels to combine");
    const auto& first = kernels.front();
    for (const auto& k : kernels) {
        if (k.patients != first.patients)
            throw DataError("kernels to combine disagree on the patient list");
        if (k.values.rows() != first.values.rows() || k.values.cols() != first.values.cols())
            throw DataError("kernels to combine disagree on shape");
    }

    KernelMatrix mean;
    mean.patients = first.patients;
    mean.values = Eigen::MatrixXd::Zero(first.values.rows(), first.values.cols());
    for (const auto& k : kernels) mean.values += k.values;
    mean.values /= static_cast<double>(kernels.size());
    return cosine_normalize(mean);
}

PsdReport check_psd(const Eigen::MatrixXd& k) {
    if (k.rows() != k.cols()) throw DataError("kernel matrix is not square");
    PsdReport report;
    report.symmetry_residual = (k - k.transpose()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw DataError("eigenvalue computation failed");
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.max_eigenvalue = solver.eigenvalues().maxCoeff();
    report.pass = report.min_eigenvalue >= -1e-8 * std::max(1.0, report.max_eigenvalue);
    return report;
}

std::string kernel_to_tsv(const KernelMatrix& k) {
    std::string out;
    for (std::size_t i = 0; i < k.patients.size(); ++i) {
        if (i > 0) out += '\t';
        out += k.patients[i];
    }
    out += '\n';
    for (Eigen::Index i = 0; i < k.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < k.values.cols(); ++j) {
            if (j > 0) out += '\t';
            out += format_g12(k.values(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_kernel_tsv(const KernelMatrix& k, const std::filesystem::path& path) {
    write_text_file(path, kernel_to_tsv(k));
}

KernelMatrix parse_kernel_tsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty kernel file", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    KernelMatrix k;
    k.patients = split_fields(line, '\t');
    if (k.patients.empty() || k.patients.front().empty())
        throw ParseError("kernel header has no patient ids", 1);
    const auto n = static_cast<Eigen::Index>(k.patients.size());
    k.values.resize(n, n);

    int line_no = 1;
    Eigen::Index row = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (row >= n) throw ParseError("kernel has more rows than patients", line_no);
        const auto fields = split_fields(line, '\t');
        if (static_cast<Eigen::Index>(fields.size()) != n)
            throw ParseError("kernel row has " + std::to_string(fields.size()) +
                                 " values, expected " + std::to_string(n),
                             line_no);
        for (Eigen::Index j = 0; j < n; ++j)
            k.values(row, j) = parse_double(fields[static_cast<std::size_t>(j)], line_no);
        ++row;
    }
    if (row != n)
        throw ParseError("kernel has " + std::to_string(row) + " rows for " +
                             std::to_string(n) + " patients",
                         line_no);
    return k;
}

KernelMatrix read_kernel_tsv(const std::filesystem::path& path) {
    try {
        return parse_kernel_tsv(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

}  // namespace smspk
