"""Connective constants of free products of rooted graphs.

Typical use::

    from connective import build_complete, factor_genfun, connective_constant

    res = connective_constant([factor_genfun(build_complete(2)),
                               factor_genfun(build_complete(3))])
    res.mu          # 1.76929...
"""

from .asymptotics import AsymptoticReport, amplitude, amplitude_interval, convergence_report
from .genfun import (
    FactorGenFun,
    GenFunError,
    build_D,
    build_N,
    expand_M,
    expand_M_star,
    genfun_from_counts,
    genfun_from_rational,
)
from .graphs import (
    GraphError,
    RootedGraph,
    build_complete,
    build_cycle,
    build_ladder_segment,
    parse_graph,
    render_graph,
)
from .pipeline import ConnectiveResult, connective_constant
from .poly import Polynomial, TruncatedSeries
from .roots import (
    NoPositiveRoot,
    RootInterval,
    dominant_singularity_check,
    find_z_star,
    smallest_positive_root,
    validate_z_star,
)
from .walks import (
    BudgetExceeded,
    SawCounts,
    factor_saw_counts,
    free_product_saw_counts,
    product_neighbors,
)

__all__ = [
    "AsymptoticReport",
    "BudgetExceeded",
    "ConnectiveResult",
    "FactorGenFun",
    "GenFunError",
    "GraphError",
    "NoPositiveRoot",
    "Polynomial",
    "RootInterval",
    "RootedGraph",
    "SawCounts",
    "TruncatedSeries",
    "amplitude",
    "amplitude_interval",
    "build_D",
    "build_N",
    "build_complete",
    "build_cycle",
    "build_ladder_segment",
    "connective_constant",
    "convergence_report",
    "dominant_singularity_check",
    "expand_M",
    "expand_M_star",
    "factor_genfun",
    "factor_saw_counts",
    "find_z_star",
    "free_product_saw_counts",
    "genfun_from_counts",
    "genfun_from_rational",
    "parse_graph",
    "product_neighbors",
    "render_graph",
    "smallest_positive_root",
    "validate_z_star",
]


def factor_genfun(g: RootedGraph) -> FactorGenFun:
    """Polynomial SAW generating function of a finite factor."""
    return genfun_from_counts(factor_saw_counts(g), str(g))


__version__ = "0.1.0"
