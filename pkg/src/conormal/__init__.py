"""Symmetry breaking in co-normal products of graphs.

The co-normal product G * H joins (g, h) and (g', h') whenever gg' is an
edge of G or hh' is an edge of H. This package builds such products,
computes their automorphism groups, distinguishing numbers D and
distinguishing indices D', and checks structural claims about them on
single instances or exhaustive small-graph corpora.
"""

from types import ModuleType as _ModuleType

from .budget import DEFAULT_BUDGET, Budget
from .census import CensusSummary, enumerate_small_graphs, parse_corpus, rigid_graphs, run_census
from .checks import CLAIMS, CheckReport, run_claim
from .distinguishing import (
    DistinguishingResult,
    EdgeLabeling,
    VertexLabeling,
    construct_l1,
    construct_l2,
    distinguishing_index,
    distinguishing_number,
    fixes_only_identity,
    is_distinguishing,
    is_traceable,
    lift_edge_labeling,
)
from .errors import (
    BudgetExceeded,
    Graph6Error,
    GraphError,
    InvalidFamilyError,
    InvalidPairError,
    NoEdgesError,
    NonFaithfulActionError,
    PreconditionError,
    SearchTimeout,
    UndefinedIndexError,
)
from .graph import (
    Graph,
    TwinStatus,
    complement,
    complete,
    cycle,
    dominating_vertices,
    empty,
    has_false_twins,
    is_connected,
    is_spanning_subgraph,
    make_family,
    neighborhood,
    parse_family,
    path,
    star,
    twin_status,
)
from .io import from_graph6, to_graph6
from .products import ProductIndexMap, cartesian, conormal, conormal_power
from .symmetry import (
    AutomorphismGroup,
    are_isomorphic,
    aut_factorizes,
    automorphisms,
    edge_action,
    group_order,
    is_automorphism,
    is_rigid,
    isomorphism,
    product_automorphism,
)

__version__ = "0.1.0"

__all__ = sorted(n for n, v in globals().items() if not n.startswith("_") and not isinstance(v, _ModuleType))
