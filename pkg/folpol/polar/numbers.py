# folpol/polar/numbers.py
"""
Polar Intersection Numbers - Generic polars of foliations and of balanced equations
"""

import random
from typing import Any, Callable, Dict, Iterable, List, Optional

import structlog

from folpol.algebra.fields import element
from folpol.algebra.intersection import branch_intersection, random_rational
from folpol.algebra.poly import diff_x, diff_y
from folpol.algebra.puiseux import Branch
from folpol.algebra.series import PuiseuxSeries, checked_order, compose_poly
from folpol.core.config import settings
from folpol.core.exceptions import NonGenericSamples
from folpol.foliation.forms import OneForm

logger = structlog.get_logger("polar")


def certified_minimum(
    order_of: Callable[[Any, Any], int],
    K,
    seed: Optional[int] = None,
    what: str = "polar",
) -> int:
    """
    Minimum of order_of(a, b) over generic directions (a : b).

    Three rational directions are sampled; the minimum is accepted once
    two samples attain it. Up to GENERIC_RESAMPLES further samples are drawn.

    Raises:
        NonGenericSamples: If no value is attained twice
    """
    rng = random.Random(settings.SEED if seed is None else seed)
    values: List[int] = []
    for attempt in range(settings.GENERIC_SAMPLES + settings.GENERIC_RESAMPLES):
        a = element(K, random_rational(rng))
        b = element(K, random_rational(rng))
        values.append(order_of(a, b))
        if len(values) < settings.GENERIC_SAMPLES:
            continue
        best = min(values)
        if values.count(best) >= 2:
            return best
        logger.info("genericity_resampled", what=what, samples=values, attempt=attempt + 1)
    raise NonGenericSamples({what: values})


def _combination(pa: PuiseuxSeries, pb: PuiseuxSeries, limit: Optional[float], context: str) -> Callable[[Any, Any], int]:
    def order_of(a, b) -> int:
        return checked_order(pa.scale(a) + pb.scale(b), limit=limit, context=context)

    return order_of


def polar_intersection(w: OneForm, branch: Branch, seed: Optional[int] = None) -> int:
    """
    (P^w, B): order along B of a*A + b*B for a generic direction (a : b).

    Args:
        w: Foliation germ A dx + B dy
        branch: Branch at the origin
        seed: Seed of the direction samples

    Returns:
        The certified polar intersection number
    """
    pa = compose_poly(w.a, branch.x, branch.y)
    pb = compose_poly(w.b, branch.x, branch.y)
    value = certified_minimum(_combination(pa, pb, None, "foliation polar"), w.field, seed, "foliation_polar")
    logger.debug("polar_intersection", target="foliation", branch=branch.label, value=value)
    return value


def gradient_order(branch: Branch, seed: Optional[int] = None) -> int:
    """Order along B of the generic directional derivative of its own equation."""
    equation = branch.equation.poly
    limit = branch.equation_bound(branch, derivative=True)
    fx = compose_poly(diff_x(equation), branch.x, branch.y)
    fy = compose_poly(diff_y(equation), branch.x, branch.y)
    return certified_minimum(_combination(fx, fy, limit, "gradient polar"), branch.field, seed, "gradient_polar")


def differential_polar(
    branch: Branch,
    others: Iterable[Any],
    seed: Optional[int] = None,
) -> int:
    """
    (P^{dF}, B) for a branch B of the zero part of a branch divisor F.

    The logarithmic derivative sum of a_i df_i / f_i, cleared along B,
    gives ord of the directional derivative of f_B plus the weighted
    intersections of B with the remaining branches.

    Args:
        branch: The branch B, coefficient one in F
        others: (coefficient, branch) pairs for the other branches of F
        seed: Seed of the direction samples
    """
    total = gradient_order(branch, seed)
    for coefficient, other in others:
        total += coefficient * branch_intersection(other, branch)
    return total


def divisor_polar(divisor: Any, key: Any, seed: Optional[int] = None, zeros: Optional[Iterable[Any]] = None) -> int:
    """
    Polar intersection of the differential of a balanced equation with one of its zero branches.

    Args:
        divisor: BranchDivisor
        key: Key of the branch
        seed: Seed of the direction samples
        zeros: Keys of the zero branches kept in the numerator (all of them when None);
            poles are always kept

    Returns:
        The polar intersection number
    """
    kept = None if zeros is None else list(zeros)
    target = divisor.item(key)
    others = []
    for item in divisor.items:
        if item.key == key:
            continue
        if item.is_zero and kept is not None and item.key not in kept:
            continue
        others.append((item.coefficient, item.branch))
    return differential_polar(target.branch, others, seed)


def polar_ledger(w: OneForm, divisor: Any, seed: Optional[int] = None) -> List[Dict[str, Any]]:
    """Both polar intersection numbers for every zero branch of a divisor."""
    rows = []
    for item in divisor.zeros:
        rows.append(
            {
                "branch": item.branch.label,
                "tag": item.branch.tag,
                "foliation": polar_intersection(w, item.branch, seed),
                "differential": divisor_polar(divisor, item.key, seed),
            }
        )
    return rows
