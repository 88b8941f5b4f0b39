"""Maximal clique enumeration and sampled tau-visible clique summaries."""

from .decomposition import (
    BoundKind,
    CoreResult,
    OrderKind,
    TrussResult,
    core_bound,
    core_decompose,
    degeneracy_order,
    edge_support,
    h_bound,
    make_order,
    truss_bound,
    truss_decompose,
    truss_order,
)
from .graph import (
    EdgeListParseError,
    Graph,
    VertexOrder,
    induced_subgraph,
    intersect_sorted,
    load_edge_list,
    neighbors,
    parse_edge_list,
    relabel,
)
from .mce import RunStats, choose_pivot, enumerate_maximal_cliques, maximal_cliques
from .summarizer import (
    Mode,
    Sampling,
    Summary,
    SummaryConfig,
    YEstimator,
    branch_keep_probability,
    estimate_d_upper,
    estimate_r_lower,
    estimate_y_upper,
    local_visibility,
    sampling_baseline,
    sampling_opt,
    summarize,
)

__version__ = "0.1.0"
