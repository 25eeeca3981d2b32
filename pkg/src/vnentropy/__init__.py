"""Graph analysis around the spectral (von Neumann) entropy of networks:
exact and degree-local entropy centrality, classical centrality
baselines, random-graph generators, and greedy dismantling experiments.
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    EdgeListParseError,
    GenerationError,
    SelfLoopError,
    UnknownNodeError,
)
from .graph import (
    ComponentPartition,
    Graph,
    average_clustering,
    ball_boundary,
    connected_components,
    degree_distribution_entropy,
    giant_component_fraction,
    load_edge_list,
    local_clustering,
    remove_nodes,
    write_edge_list,
)
from .eigen import count_zero_eigenvalues, symmetric_eigenvalues
from .spectral import (
    entropy_centrality_all,
    entropy_centrality_approx,
    entropy_centrality_approx_all,
    entropy_centrality_exact,
    entropy_centrality_subgraph,
    entropy_from_spectrum,
    entropy_s1,
    entropy_s2,
    normalized_laplacian,
    trace_power,
    von_neumann_entropy,
)
from .scores import CentralityScores, Method
from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    clustering_centrality,
    collective_influence,
    compute_centrality,
    degree_centrality,
    eigenvector_centrality,
    k_core,
    pagerank,
)
from .generators import (
    GeneratorConfig,
    erdos_renyi_gnm,
    generate,
    random_geometric,
    scale_free_configuration,
)
from .experiments import (
    DismantleStep,
    DismantleTrace,
    ExperimentConfig,
    correlation_trace,
    dismantle,
    read_trace_csv,
    run_figure_experiment,
    spearman,
    write_trace_csv,
)
from .datasets import BUNDLED, load_dataset, resolve_graph

__all__ = [name for name in dir() if not name.startswith("_")]
