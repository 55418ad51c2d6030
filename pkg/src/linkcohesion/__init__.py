"""Link-cohesion edge scoring, density pruning, and truss community finding.

The hot kernels (hop-strength enumeration, truss peeling, betweenness) run
from a compiled extension when it is built; ``backend()`` reports which
implementation is active.
"""

from ._backend import BACKEND
from .baselines import edge_betweenness, jaccard_all, jaccard_similarity, sparsify_local
from .cohesion import (
    EdgeScoreTable,
    double_link_strength,
    read_scores_csv,
    score_all,
    single_link_strength,
    triple_link_strength,
    write_scores_csv,
)
from .evaluation import (
    BINARY_WEIGHT_COMBOS,
    EvalReport,
    GeneratorSpec,
    UndefinedMetricError,
    f_score,
    pearson,
    planted_partition,
    run_pipeline,
)
from .graph import (
    CommunityAssignment,
    Components,
    EdgeListParseError,
    Graph,
    connected_components,
    load_communities,
    load_edge_list,
)
from .pruning import DensityCurve, density, mdcore_sweep, prune, write_density_curve
from .truss import TrussResult, maximal_community_truss, truss_decomposition

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active kernel backend: 'cython' or 'python'."""
    return BACKEND


__all__ = [
    "BACKEND",
    "BINARY_WEIGHT_COMBOS",
    "CommunityAssignment",
    "Components",
    "DensityCurve",
    "EdgeListParseError",
    "EdgeScoreTable",
    "EvalReport",
    "GeneratorSpec",
    "Graph",
    "TrussResult",
    "UndefinedMetricError",
    "backend",
    "connected_components",
    "density",
    "double_link_strength",
    "edge_betweenness",
    "f_score",
    "jaccard_all",
    "jaccard_similarity",
    "load_communities",
    "load_edge_list",
    "maximal_community_truss",
    "mdcore_sweep",
    "pearson",
    "planted_partition",
    "prune",
    "read_scores_csv",
    "run_pipeline",
    "score_all",
    "single_link_strength",
    "sparsify_local",
    "triple_link_strength",
    "truss_decomposition",
    "write_density_curve",
    "write_scores_csv",
]
