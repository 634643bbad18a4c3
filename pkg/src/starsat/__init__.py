"""Star saturation numbers of graphs: exact solvers on small hosts, a
verified clique-cover construction at moderate scale, closed-form
predictions for random hosts, and a seeded Monte Carlo harness."""

from ._kernels import BACKEND
from .graph import (
    Graph,
    GraphError,
    ParseError,
    Seed,
    induced_edge_count,
    make_graph,
    complete_graph,
    parse,
    sample_gnp,
    serialize,
)
from .sparse import SparseSetResult, count_sets, max_sparse_set, sparse_set_decision
from .theory import (
    Prediction,
    TheoryParams,
    alpha_p_value,
    classic_clique_sat,
    classic_star_sat,
    log_phi,
    predict,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Graph",
    "GraphError",
    "ParseError",
    "Seed",
    "SparseSetResult",
    "Prediction",
    "TheoryParams",
    "alpha_p_value",
    "classic_clique_sat",
    "classic_star_sat",
    "complete_graph",
    "count_sets",
    "induced_edge_count",
    "log_phi",
    "make_graph",
    "max_sparse_set",
    "parse",
    "predict",
    "sample_gnp",
    "serialize",
    "sparse_set_decision",
    "__version__",
]
