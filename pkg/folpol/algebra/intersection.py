# folpol/algebra/intersection.py
"""
Intersection Numbers - Resultant and branch routes, plus blow-up counts
"""

import math
import random
from fractions import Fraction
from typing import List, Optional, Union

import structlog
from sympy.polys.rings import PolyElement, ring

from folpol.algebra.fields import element
from folpol.algebra.poly import coefficient, compose, format_poly, is_unit_at_origin
from folpol.algebra.puiseux import Branch, blow_up_branch, branch_tangent, newton_puiseux, order_along
from folpol.algebra.truncation import adaptive, start_trunc
from folpol.core.config import settings
from folpol.core.exceptions import InvariantViolation, NonGenericSamples

logger = structlog.get_logger("intersection")

Intersection = Union[int, float]


def random_rational(rng: random.Random, bound: int = 97) -> Fraction:
    num = rng.randint(-bound, bound) or 1
    return Fraction(num, rng.randint(1, 13))


def _shear(p: PolyElement, c) -> PolyElement:
    R = p.ring
    x, y = R.gens
    return compose(p, x + y * R.ground_new(c), y)


def _resultant_order(f: PolyElement, g: PolyElement, c) -> Optional[int]:
    K = f.ring.domain
    Ryx, _, _ = ring("y,x", K)
    res = _shear(f, c).set_ring(Ryx).resultant(_shear(g, c).set_ring(Ryx))
    if not res:
        return None
    if not hasattr(res, "itermonoms"):
        return 0
    return min(m[0] for m in res.itermonoms())


def _common_factor_at_origin(f: PolyElement, g: PolyElement):
    h = f.gcd(g)
    if h.is_ground:
        return None
    return h


def intersection_by_resultant(f: PolyElement, g: PolyElement, seed: Optional[int] = None) -> Intersection:
    """
    Order at x = 0 of Res_y after a random shear, certified by two agreeing samples.
    """
    if not f or not g:
        return math.inf
    if coefficient(f, 0, 0) or coefficient(g, 0, 0):
        return 0
    h = _common_factor_at_origin(f, g)
    if h is not None:
        if not is_unit_at_origin(h):
            return math.inf
        f, g = f.exquo(h), g.exquo(h)

    K = f.ring.domain
    rng = random.Random(settings.SEED if seed is None else seed)
    orders: List[int] = []
    attempts = settings.GENERIC_SAMPLES + settings.GENERIC_RESAMPLES
    for _ in range(attempts):
        value = _resultant_order(f, g, element(K, random_rational(rng)))
        if value is None:
            continue
        orders.append(value)
        best = min(orders)
        if orders.count(best) >= 2:
            return best
    raise NonGenericSamples({"resultant_orders": orders})


def intersection_by_branches(f: PolyElement, g: PolyElement, trunc: Optional[int] = None) -> Intersection:
    """Sum over the branches of f (with multiplicity) of ord g along the branch."""
    if not f or not g:
        return math.inf
    if coefficient(f, 0, 0) or coefficient(g, 0, 0):
        return 0
    h = _common_factor_at_origin(f, g)
    if h is not None and not is_unit_at_origin(h):
        return math.inf

    _, factors = f.sqf_list()

    def compute(n: int) -> int:
        total = 0
        for factor, power in factors:
            for branch in newton_puiseux(factor, n):
                total += power * order_along(g, branch, context="intersection")
        return total

    return adaptive(compute, start=trunc or start_trunc([f, g]))


def intersection_number(
    f: PolyElement,
    g: PolyElement,
    method: str = "resultant",
    seed: Optional[int] = None,
) -> Intersection:
    """
    Intersection multiplicity of f = 0 and g = 0 at the origin.

    Args:
        f: First curve
        g: Second curve
        method: "resultant", "branches" or "both" (cross-checked)
        seed: Seed of the shear directions

    Returns:
        Non-negative integer, or math.inf for a common component through 0

    Raises:
        InvariantViolation: If "both" routes disagree
    """
    if method == "branches":
        return intersection_by_branches(f, g)
    value = intersection_by_resultant(f, g, seed)
    if method == "both":
        other = intersection_by_branches(f, g)
        if other != value:
            raise InvariantViolation("intersection_number", value, other)
    logger.debug("intersection_computed", f=format_poly(f), g=format_poly(g), value=value)
    return value


def branch_intersection(b1: Branch, b2: Branch, symmetric: bool = True) -> int:
    """
    (b1, b2) as ord of b2's equation along b1, checked against the swapped order.

    Raises:
        TruncationInsufficient: If either order reaches its bound
        InvariantViolation: If the two orders disagree
    """
    value = order_along(b2.equation.poly, b1, limit=b2.equation_bound(b1), context="branch intersection")
    if symmetric:
        other = order_along(b1.equation.poly, b2, limit=b1.equation_bound(b2), context="branch intersection")
        if other != value:
            raise InvariantViolation("branch_intersection symmetry", value, other)
    return value


def noether_intersection(b1: Branch, b2: Branch) -> int:
    """Sum of m_p(b1) m_p(b2) over the infinitely near points shared by both branches."""
    total = 0
    while True:
        total += b1.multiplicity * b2.multiplicity
        t1, t2 = branch_tangent(b1), branch_tangent(b2)
        if t1[0] != t2[0] or (t1[0] == "X" and t1[1] != t2[1]):
            return total
        b1 = blow_up_branch(b1, *t1)
        b2 = blow_up_branch(b2, *t2)


def branch_milnor(branch: Branch) -> int:
    """Sum of m_p (m_p - 1) over the infinitely near points of a branch."""
    total = 0
    m = branch.multiplicity
    while m > 1:
        total += m * (m - 1)
        branch = blow_up_branch(branch, *branch_tangent(branch))
        m = branch.multiplicity
    return total
