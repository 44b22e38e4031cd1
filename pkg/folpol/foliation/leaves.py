# folpol/foliation/leaves.py
"""
Leaves - Invariant curve jets, invariance tests and tangency indices
"""

import math
from typing import Any, Optional, Tuple

import structlog
from sympy.polys.ring_series import rs_mul

from folpol.algebra.poly import coefficient
from folpol.algebra.puiseux import Branch, order_along
from folpol.algebra.series import PuiseuxSeries, compose_poly, eval_truncated, series_ring
from folpol.core.exceptions import NotInvariant
from folpol.foliation.forms import OneForm, multiplicity

logger = structlog.get_logger("leaves")


def _singular_graph(w: OneForm, c1, trunc: int):
    """phi with a(t, phi) + b(t, phi) phi' = 0, phi = c1 t + ..., solved term by term."""
    K = w.field
    R = series_ring(K)
    t = R.gens[0]
    a10, a01, b10, b01 = w.linear_part()
    slope = b10 + b01 * c1
    base = a01 + b01 * c1

    phi = t * c1 if c1 else R.zero
    for n in range(2, trunc):
        prec = n + 1
        residual = eval_truncated(w.a, t, phi, prec) + rs_mul(
            eval_truncated(w.b, t, phi, prec), phi.diff(t), t, prec
        )
        rn = residual.get((n,), K.zero)
        linear = base + slope * K.convert(n)
        if not linear:
            if rn:
                raise NotInvariant(f"no formal invariant curve of {w.format()} tangent to slope {c1}")
            continue
        if rn:
            phi = phi - R.term_new((n,), K.quo(rn, linear))
    return phi


def _regular_graph(w: OneForm, trunc: int):
    """Leaf y = phi(x) through a regular point with b(0, 0) != 0."""
    K = w.field
    R = series_ring(K)
    t = R.gens[0]
    b00 = coefficient(w.b, 0, 0)
    phi = R.zero
    for n in range(1, trunc):
        prec = n
        residual = eval_truncated(w.a, t, phi, prec) + rs_mul(
            eval_truncated(w.b, t, phi, prec), phi.diff(t), t, prec
        )
        rn = residual.get((n - 1,), K.zero)
        if rn:
            phi = phi - R.term_new((n,), K.quo(rn, b00 * K.convert(n)))
    return phi


def invariant_curve_jet(w: OneForm, direction: Optional[Tuple[Any, Any]] = None, trunc: int = 32) -> Branch:
    """
    Truncated invariant curve through the origin.

    At a singular point of multiplicity one the curve is tangent to the
    given eigen-direction; at a regular point it is the leaf.

    Args:
        w: Germ
        direction: Eigen-direction (v1, v2); ignored at regular points
        trunc: Truncation order of the parametrization

    Returns:
        Smooth Branch parametrized as a graph

    Raises:
        NotInvariant: If no formal solution tangent to the direction exists
    """
    K = w.field
    t = series_ring(K).gens[0]
    if multiplicity(w) == 0:
        if coefficient(w.b, 0, 0):
            return Branch(PuiseuxSeries(t, trunc), PuiseuxSeries(_regular_graph(w, trunc), trunc))
        psi = _regular_graph(w.swap(), trunc)
        return Branch(PuiseuxSeries(psi, trunc), PuiseuxSeries(t, trunc))

    if direction is None:
        raise ValueError("a direction is required at a singular point")
    v1, v2 = direction
    if v1:
        phi = _singular_graph(w, K.quo(v2, v1), trunc)
        return Branch(PuiseuxSeries(t, trunc), PuiseuxSeries(phi, trunc))
    psi = _singular_graph(w.swap(), K.quo(v1, v2), trunc)
    return Branch(PuiseuxSeries(psi, trunc), PuiseuxSeries(t, trunc))


def invariance_residual(w: OneForm, branch: Branch) -> PuiseuxSeries:
    """a(gamma) x' + b(gamma) y' along the branch."""
    return compose_poly(w.a, branch.x, branch.y) * branch.x.derivative() + compose_poly(
        w.b, branch.x, branch.y
    ) * branch.y.derivative()


def is_invariant_branch(w: OneForm, branch: Branch) -> bool:
    """True when the branch is a leaf of w up to its precision."""
    return invariance_residual(w, branch).is_known_zero()


def tangency_index(w: OneForm, branch: Branch) -> int:
    """
    Order of contact of w with a smooth invariant branch.

    Raises:
        NotInvariant: If the branch is not invariant
    """
    if not is_invariant_branch(w, branch):
        raise NotInvariant(f"branch is not a leaf of {w.format()}")
    if branch.x.valuation == 1:
        return order_along(w.b, branch, context="tangency index")
    return order_along(w.a, branch, context="tangency index")


def divisor_index(w: OneForm, axis: str) -> float:
    """Tangency index along a coordinate axis: "y" is {y = 0}, "x" is {x = 0}."""
    if axis == "y":
        orders = [i for (i, j) in w.b.itermonoms() if j == 0]
    else:
        orders = [j for (i, j) in w.a.itermonoms() if i == 0]
    return min(orders) if orders else math.inf


def weak_separatrix_jet(w: OneForm, trunc: int) -> Branch:
    """Formal weak separatrix of a saddle-node."""
    from folpol.foliation.singularity import SaddleNode, classify

    sing = classify(w)
    if not isinstance(sing, SaddleNode):
        raise ValueError(f"{w.format()} is not a saddle-node")
    jet = invariant_curve_jet(w, sing.weak_direction, trunc)
    return jet.retag(tag="formal", formal=True)
