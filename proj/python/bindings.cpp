#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

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

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "smoothed shortest path kernel patient stratification";

    py::register_exception<smspk::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<smspk::DataError>(m, "DataError", PyExc_RuntimeError);
    py::register_exception<smspk::NoPathwayPassedError>(m, "NoPathwayPassedError",
                                                        PyExc_RuntimeError);

    py::class_<smspk::PathwayGraph>(m, "PathwayGraph")
        .def_readonly("id", &smspk::PathwayGraph::id)
        .def_readonly("genes", &smspk::PathwayGraph::genes)
        .def_property_readonly("vertex_count", &smspk::PathwayGraph::vertex_count)
        .def_property_readonly("edge_count", &smspk::PathwayGraph::edge_count)
        .def("has_edge", &smspk::PathwayGraph::has_edge)
        .def("adjacency_matrix", &smspk::PathwayGraph::adjacency_matrix)
        .def("__repr__", [](const smspk::PathwayGraph& g) {
            return "PathwayGraph('" + g.id + "', " + std::to_string(g.vertex_count()) +
                   " genes)";
        });

    py::class_<smspk::ShortestPath>(m, "ShortestPath")
        .def_readonly("vertices", &smspk::ShortestPath::vertices)
        .def_property_readonly("length", &smspk::ShortestPath::length);

    py::class_<smspk::ShortestPathSet>(m, "ShortestPathSet")
        .def_readonly("pathway_id", &smspk::ShortestPathSet::pathway_id)
        .def_readonly("paths", &smspk::ShortestPathSet::paths)
        .def_property_readonly("count", &smspk::ShortestPathSet::count);

    py::class_<smspk::MutationCatalog>(m, "MutationCatalog")
        .def_readonly("patients", &smspk::MutationCatalog::patients)
        .def("has_patient", &smspk::MutationCatalog::has_patient);

    py::class_<smspk::SurvivalTable>(m, "SurvivalTable")
        .def("patients_sorted", &smspk::SurvivalTable::patients_sorted)
        .def("__len__",
             [](const smspk::SurvivalTable& t) { return t.records.size(); });

    py::class_<smspk::KernelMatrix>(m, "KernelMatrix")
        .def_readonly("patients", &smspk::KernelMatrix::patients)
        .def_readonly("values", &smspk::KernelMatrix::values)
        .def("is_zero", &smspk::KernelMatrix::is_zero);

    py::class_<smspk::PsdReport>(m, "PsdReport")
        .def_readonly("min_eigenvalue", &smspk::PsdReport::min_eigenvalue)
        .def_readonly("max_eigenvalue", &smspk::PsdReport::max_eigenvalue)
        .def_readonly("symmetry_residual", &smspk::PsdReport::symmetry_residual)
        .def_readonly("ok", &smspk::PsdReport::pass);

    py::class_<smspk::ClusterAssignment>(m, "ClusterAssignment")
        .def_readonly("patients", &smspk::ClusterAssignment::patients)
        .def_readonly("labels", &smspk::ClusterAssignment::labels)
        .def_readonly("k", &smspk::ClusterAssignment::k)
        .def_readonly("objective", &smspk::ClusterAssignment::objective)
        .def("cluster_sizes", &smspk::ClusterAssignment::cluster_sizes);

    py::class_<smspk::LogRankResult>(m, "LogRankResult")
        .def_readonly("statistic", &smspk::LogRankResult::statistic)
        .def_readonly("degrees_of_freedom", &smspk::LogRankResult::degrees_of_freedom)
        .def_readonly("p_value", &smspk::LogRankResult::p_value);

    py::class_<smspk::SyntheticCohort>(m, "SyntheticCohort")
        .def_readonly("patients", &smspk::SyntheticCohort::patients)
        .def_readonly("labels", &smspk::SyntheticCohort::labels)
        .def_readonly("true_group", &smspk::SyntheticCohort::true_group)
        .def_readonly("driver_paths", &smspk::SyntheticCohort::driver_paths);

    py::class_<smspk::SimulationRow>(m, "SimulationRow")
        .def_readonly("p_in", &smspk::SimulationRow::p_in)
        .def_readonly("p_out", &smspk::SimulationRow::p_out)
        .def_readonly("alpha", &smspk::SimulationRow::alpha)
        .def_readonly("repetitions", &smspk::SimulationRow::repetitions)
        .def_readonly("mean_accuracy", &smspk::SimulationRow::mean_accuracy)
        .def_readonly("sd_accuracy", &smspk::SimulationRow::sd_accuracy);

    m.def("load_pathway_file", &smspk::load_pathway_file, py::arg("path"));
    m.def("load_pathway_set", &smspk::load_pathway_set, py::arg("directory"));
    m.def("all_shortest_paths", &smspk::all_shortest_paths, py::arg("pathway"));
    m.def("diameter", &smspk::diameter, py::arg("pathway"));

    m.def(
        "load_mutations_file",
        [](const std::filesystem::path& path) { return smspk::load_mutations_file(path); },
        py::arg("path"));
    m.def("load_clinical_file", &smspk::load_clinical_file, py::arg("path"));
    m.def("label_matrix", &smspk::label_matrix, py::arg("catalog"), py::arg("patients"),
          py::arg("pathway"));

    m.def(
        "smooth",
        [](const Eigen::MatrixXd& s0, double alpha) { return smspk::smooth_direct(s0, alpha); },
        py::arg("s0"), py::arg("alpha"));

    m.def(
        "pathway_kernel",
        [](const smspk::PathwayGraph& g, const Eigen::MatrixXd& labels,
           const std::vector<std::string>& patients, double alpha) {
            smspk::SmoothingConfig cfg;
            cfg.alpha = alpha;
            return smspk::pathway_kernel(g, smspk::all_shortest_paths(g), labels, patients,
                                         cfg);
        },
        py::arg("pathway"), py::arg("labels"), py::arg("patients"), py::arg("alpha"));
    m.def("cosine_normalize", &smspk::cosine_normalize, py::arg("kernel"));
    m.def("combine_kernels", &smspk::combine_kernels, py::arg("kernels"));
    m.def("check_psd",
          py::overload_cast<const smspk::KernelMatrix&>(&smspk::check_psd),
          py::arg("kernel"));

    m.def("kernel_kmeans", &smspk::kernel_kmeans, py::arg("kernel"), py::arg("k"),
          py::arg("restarts") = 100, py::arg("seed") = 0, py::arg("max_iterations") = 300);
    m.def("kernel_silhouette", &smspk::kernel_silhouette, py::arg("kernel"),
          py::arg("assignment"));

    m.def("logrank_test",
          py::overload_cast<const smspk::SurvivalTable&, const smspk::ClusterAssignment&>(
              &smspk::logrank_test),
          py::arg("clinical"), py::arg("assignment"));
    m.def("chi_square_upper_tail", &smspk::chi_square_upper_tail, py::arg("x"), py::arg("df"));

    m.def(
        "generate_cohort",
        [](const smspk::PathwayGraph& g, int groups, int patients_per_group, double p_in,
           double p_out, std::uint64_t seed) {
            smspk::SyntheticSpec spec;
            spec.groups = groups;
            spec.patients_per_group = patients_per_group;
            spec.p_in = p_in;
            spec.p_out = p_out;
            spec.seed = seed;
            return smspk::generate_cohort(g, spec);
        },
        py::arg("pathway"), py::arg("groups"), py::arg("patients_per_group"), py::arg("p_in"),
        py::arg("p_out"), py::arg("seed"));
    m.def("clustering_accuracy",
          py::overload_cast<const smspk::ClusterAssignment&, const std::vector<int>&>(
              &smspk::clustering_accuracy),
          py::arg("predicted"), py::arg("truth"));
    m.def(
        "run_simulation_grid",
        [](const smspk::PathwayGraph& g, const std::vector<double>& p_in,
           const std::vector<double>& p_out, const std::vector<double>& alpha, int repetitions,
           std::uint64_t seed, int groups, int patients_per_group, int restarts) {
            smspk::SimulationOptions opts;
            opts.repetitions = repetitions;
            opts.seed = seed;
            opts.groups = groups;
            opts.patients_per_group = patients_per_group;
            opts.restarts = restarts;
            return smspk::run_simulation_grid(g, p_in, p_out, alpha, opts);
        },
        py::arg("pathway"), py::arg("p_in"), py::arg("p_out"), py::arg("alpha"),
        py::arg("repetitions") = 100, py::arg("seed") = 0, py::arg("groups") = 3,
        py::arg("patients_per_group") = 200, py::arg("restarts") = 10);
}
