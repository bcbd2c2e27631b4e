"""2-switch degrees, vertex activity, split graphs and realization graphs.

The hot counting kernels come from a compiled extension when it is
available and from pure Python otherwise; ``twoswitch.kernels.BACKEND``
says which one is in use.
"""

__version__ = "0.1.0"

from .census import (
    Census4,
    CountSummary,
    census4,
    count_summary,
    degree_formula,
    degree_zagreb_relation,
    dpe,
    subgraph_counts,
    zagreb,
)
from .errors import CapExceededError, GraphFormatError, NotGraphicalError
from .forests import classify_switch, decompose_unicyclic, f_degree, tree_degree, u_degree
from .graph import DegreeSequence, Graph, complement, parse_graph, to_graph6
from .kernels import BACKEND
from .realization import (
    RealizationGraph,
    active_space,
    build_realization_graph,
    enumerate_realizations,
    is_graphical,
    verify_dual_isomorphism,
)
from .split import (
    SplitAnalysis,
    SplitBipartition,
    bipartitions,
    compose,
    is_decomposable,
    is_prime,
    is_split,
    split_active_vertices,
)
from .switch import (
    ActivityReport,
    TwoSwitch,
    active_part,
    active_vertices,
    apply,
    enumerate_active_switches,
    find_switch_sequence,
    is_active,
    two_switch_degree,
)

__all__ = [
    "BACKEND",
    "ActivityReport",
    "CapExceededError",
    "Census4",
    "CountSummary",
    "DegreeSequence",
    "Graph",
    "GraphFormatError",
    "NotGraphicalError",
    "RealizationGraph",
    "SplitAnalysis",
    "SplitBipartition",
    "TwoSwitch",
    "active_part",
    "active_space",
    "active_vertices",
    "apply",
    "bipartitions",
    "build_realization_graph",
    "census4",
    "classify_switch",
    "complement",
    "compose",
    "count_summary",
    "decompose_unicyclic",
    "degree_formula",
    "degree_zagreb_relation",
    "dpe",
    "enumerate_active_switches",
    "enumerate_realizations",
    "f_degree",
    "find_switch_sequence",
    "is_active",
    "is_decomposable",
    "is_graphical",
    "is_prime",
    "is_split",
    "parse_graph",
    "split_active_vertices",
    "subgraph_counts",
    "to_graph6",
    "tree_degree",
    "two_switch_degree",
    "u_degree",
    "verify_dual_isomorphism",
    "zagreb",
]
