"""Rainbow connection of dense graphs: hypothesis checks, random colorings, exact rc."""

from .coloring import (
    EdgeColoring,
    RainbowWitness,
    is_rainbow_connected,
    is_rainbow_path,
    las_vegas_color,
    rainbow_reachable,
    sample_uniform_coloring,
)
from .exact import RcResult, SearchBudget, rc_decision, rc_exact
from .generators import FamilySpec, generate
from .graph import (
    INF,
    Bipartition,
    Graph,
    GraphError,
    bipartition,
    build_graph,
    common_neighbors,
    diameter,
    distance,
    is_connected,
    min_degree,
    sigma2,
)
from .theorems import (
    BoundReport,
    TheoremCheck,
    bound_report,
    check_theorem,
    common_neighbor_lower_bound,
    pair_failure_bound,
    path_failure_prob,
    required_threshold,
    union_bound_failure,
)

__version__ = "0.1.0"
