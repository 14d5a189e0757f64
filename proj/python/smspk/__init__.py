"""Smoothed shortest path kernel patient stratification."""

from ._core import (
    ClusterAssignment,
    ConfigError,
    DataError,
    KernelMatrix,
    LogRankResult,
    MutationCatalog,
    NoPathwayPassedError,
    PathwayGraph,
    PsdReport,
    ShortestPath,
    ShortestPathSet,
    SimulationRow,
    SurvivalTable,
    SyntheticCohort,
    all_shortest_paths,
    check_psd,
    chi_square_upper_tail,
    clustering_accuracy,
    combine_kernels,
    cosine_normalize,
    diameter,
    generate_cohort,
    kernel_kmeans,
    kernel_silhouette,
    label_matrix,
    load_clinical_file,
    load_mutations_file,
    load_pathway_file,
    load_pathway_set,
    logrank_test,
    pathway_kernel,
    run_simulation_grid,
    smooth,
)

__all__ = [
    "ClusterAssignment",
    "ConfigError",
    "DataError",
    "KernelMatrix",
    "LogRankResult",
    "MutationCatalog",
    "NoPathwayPassedError",
    "PathwayGraph",
    "PsdReport",
    "ShortestPath",
    "ShortestPathSet",
    "SimulationRow",
    "SurvivalTable",
    "SyntheticCohort",
    "all_shortest_paths",
    "check_psd",
    "chi_square_upper_tail",
    "clustering_accuracy",
    "combine_kernels",
    "cosine_normalize",
    "diameter",
    "generate_cohort",
    "kernel_kmeans",
    "kernel_silhouette",
    "label_matrix",
    "load_clinical_file",
    "load_mutations_file",
    "load_pathway_file",
    "load_pathway_set",
    "logrank_test",
    "pathway_kernel",
    "run_simulation_grid",
    "smooth",
]

__version__ = "0.1.0"
