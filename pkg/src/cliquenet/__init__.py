"""Hybrid evolving clique networks: growth, structural metrics, communicability."""

from .baselines import ErConfig, er_random_graph
from .communicability import (
    CapacityError,
    EstradaResult,
    SpectralDecomposition,
    adjacency_spectrum,
    communicability_matrix,
    communicability_series_oracle,
    estrada_index,
    estrada_series_oracle,
)
from .generator import (
    AttachmentRecord,
    CliqueNetConfig,
    NodeSelection,
    asymptotic_mean_degree,
    attach_clique,
    evolve,
    evolve_with_records,
    initial_clique,
    select_attachment_nodes,
    steps_for_target_nodes,
)
from .graph import Graph, connected_components, induced_subgraph, load_edgelist, save_edgelist
from .metrics import (
    ClusteringSpectrum,
    DegreeHistogram,
    DisconnectedGraphError,
    MetricsSummary,
    PathStats,
    PowerLawFit,
    average_shortest_path_length,
    central_decade,
    clustering_spectrum,
    default_fit_window,
    degree_histogram,
    fit_loglog_slope,
    fit_semilog_slope,
    global_clustering,
    local_clustering,
    metrics_summary,
    midrange_window,
)

__version__ = "0.1.0"
