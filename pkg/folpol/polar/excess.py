# folpol/polar/excess.py
"""
Polar Excess - Absolute and relative polar excess, and the polar generalized-curve test
"""

from typing import Any, Dict, List, Optional, Sequence

import structlog

from folpol.foliation.forms import OneForm
from folpol.polar.numbers import divisor_polar, polar_intersection
from folpol.reduction.tree import ReductionTree
from folpol.separatrix.balanced import BranchDivisor, balanced_equation

logger = structlog.get_logger("polar_excess")


def branch_excess(w: OneForm, divisor: BranchDivisor, key: Any, seed: Optional[int] = None) -> int:
    """var_p(F, B) = (P^F, B) - (P^dF, B) for one zero branch."""
    item = divisor.item(key)
    return polar_intersection(w, item.branch, seed) - divisor_polar(divisor, key, seed)


def polar_excess(
    w: OneForm,
    divisor: BranchDivisor,
    keys: Optional[Sequence[Any]] = None,
    seed: Optional[int] = None,
) -> int:
    """
    var_p(F, C): sum of the branch excesses over C.

    Args:
        w: Foliation germ
        divisor: Balanced equation whose zero part contains C
        keys: Keys of the branches of C (the whole zero part when None)
        seed: Seed of the direction samples

    Returns:
        The polar excess
    """
    keys = [item.key for item in divisor.zeros] if keys is None else list(keys)
    return sum(branch_excess(w, divisor, key, seed) for key in keys)


def polar_excess_rel(
    w: OneForm,
    divisor: BranchDivisor,
    keys: Sequence[Any],
    seed: Optional[int] = None,
) -> int:
    """Relative polar excess: the differential of (equation of C) / (pole part) replaces dF."""
    keys = list(keys)
    total = 0
    for key in keys:
        item = divisor.item(key)
        total += polar_intersection(w, item.branch, seed) - divisor_polar(divisor, key, seed, zeros=keys)
    return total


def excess_ledger(w: OneForm, divisor: BranchDivisor, seed: Optional[int] = None) -> List[Dict[str, Any]]:
    return [
        {"branch": item.branch.label, "tag": item.branch.tag, "var": branch_excess(w, divisor, item.key, seed)}
        for item in divisor.zeros
    ]


def is_generalized_curve_polar(
    w: OneForm,
    tree: ReductionTree,
    trunc: int,
    seed: Optional[int] = None,
) -> bool:
    """A germ is a generalized curve exactly when var_p(F, (F)_0) vanishes."""
    divisor = balanced_equation(tree, trunc)
    value = polar_excess(w, divisor, seed=seed)
    logger.debug("polar_generalized_curve", germ=w.format(), var=value)
    return value == 0
