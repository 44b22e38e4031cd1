# folpol/polar/gsv.py
"""
GSV Index - Direct computation and the polar excess formula
"""

from itertools import combinations
from typing import Any, Dict, Optional, Sequence

import structlog

from folpol.algebra.intersection import branch_intersection
from folpol.algebra.poly import diff_x, diff_y
from folpol.algebra.puiseux import Branch, order_along
from folpol.foliation.forms import OneForm
from folpol.polar.excess import polar_excess
from folpol.reduction.tree import ReductionTree
from folpol.separatrix.balanced import balanced_equation

logger = structlog.get_logger("gsv")


def branch_gsv(w: OneForm, branch: Branch) -> int:
    """
    GSV index of w along one invariant branch B = {f = 0}.

    Along B, g w = k df, so k/g is b / f_y (or a / f_x when f_y vanishes identically).
    """
    f = branch.equation.poly
    limit = branch.equation_bound(branch, derivative=True)
    fy = diff_y(f)
    if fy:
        return order_along(w.b, branch, context="gsv") - order_along(fy, branch, limit=limit, context="gsv")
    return order_along(w.a, branch, context="gsv") - order_along(diff_x(f), branch, limit=limit, context="gsv")


def gsv_direct(w: OneForm, branches: Sequence[Branch]) -> int:
    """GSV(C0 + C1) = GSV(C0) + GSV(C1) - 2 (C0, C1), summed over the branches."""
    total = sum(branch_gsv(w, branch) for branch in branches)
    for b1, b2 in combinations(branches, 2):
        total -= 2 * branch_intersection(b1, b2)
    return total


def gsv_by_polars(
    w: OneForm,
    tree: ReductionTree,
    branches: Sequence[Branch],
    trunc: int,
    seed: Optional[int] = None,
) -> Dict[str, Any]:
    """
    GSV from a balanced equation F adapted to C:
    var_p(F, C) + (C, (F)_0 - C) - (C, (F)_inf).

    Returns:
        Record with the value and its three terms
    """
    divisor = balanced_equation(tree, trunc, adapt_to=branches)
    keys = list(divisor.adapted_keys)
    var = polar_excess(w, divisor, keys, seed)

    curve = divisor.adapted_items()
    zeros_rest = [item for item in divisor.zeros if item.key not in keys]
    against_zeros = sum(branch_intersection(c.branch, z.branch) for c in curve for z in zeros_rest)
    against_poles = sum(-p.coefficient * branch_intersection(c.branch, p.branch) for c in curve for p in divisor.poles)
    value = var + against_zeros - against_poles
    logger.debug("gsv_by_polars", var=var, zeros=against_zeros, poles=against_poles, value=value)
    return {
        "value": value,
        "var": var,
        "zeros_term": against_zeros,
        "poles_term": against_poles,
        "divisor": divisor,
    }
