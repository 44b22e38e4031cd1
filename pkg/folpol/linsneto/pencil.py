# folpol/linsneto/pencil.py
"""
Lins Neto Pencil - Degree of the invariant curves and local terms of radial points
"""

import math
from typing import Any, Dict, Optional

import structlog
from sympy.polys.domains import QQ

from folpol.algebra.poly import poly_ring
from folpol.algebra.puiseux import newton_puiseux
from folpol.algebra.truncation import adaptive
from folpol.core.exceptions import ExcludedParameter, InvalidInput, InvariantViolation
from folpol.core.logging_config import FolpolLogger
from folpol.foliation.forms import OneForm
from folpol.linsneto.eisenstein import EisensteinInt, IntLike, reduce_ratio
from folpol.polar.gsv import gsv_by_polars
from folpol.reduction.reducer import reduce

logger = structlog.get_logger("linsneto")

J = EisensteinInt.j()
EXCLUDED = (EisensteinInt(1, 0), J, J * J)


def is_excluded(num: EisensteinInt, den: EisensteinInt) -> bool:
    """alpha in {1, j, j^2, infinity}."""
    if den.is_zero():
        return True
    return any((num - value * den).is_zero() for value in EXCLUDED)


def pencil_degree(numerator: IntLike, denominator: IntLike = 1) -> Dict[str, Any]:
    """
    Degree d0 of the invariant curve of the pencil member at alpha = numerator / denominator.

    Two routes: 3 + sqrt(9 + 3 sum(N_i^2 - 2 N_i)) and the plain norm sum.

    Args:
        numerator: alpha_1 in Z[j]
        denominator: beta_1 in Z[j]

    Returns:
        Record with the reduced ratio, the four norms, the radicand and both values of d0

    Raises:
        ExcludedParameter: If alpha is 1, j, j^2 or infinity
        InvariantViolation: If the two routes disagree
    """
    a1, b1 = reduce_ratio(numerator, denominator)
    if is_excluded(a1, b1):
        raise ExcludedParameter(f"({numerator})/({denominator})")

    norms = [a1.norm(), b1.norm(), (a1 - b1).norm(), (a1 + J * b1).norm()]
    radicand = 9 + 3 * sum(n * n - 2 * n for n in norms)
    root = math.isqrt(radicand)
    if root * root != radicand:
        raise InvariantViolation("pencil radicand is a square", radicand, root * root)
    by_radicand = 3 + root
    by_norms = sum(norms)
    if by_radicand != by_norms:
        raise InvariantViolation("pencil degree", by_radicand, by_norms)

    FolpolLogger.log_invariant("pencil_degree", by_norms, alpha=f"({a1})/({b1})")
    return {
        "alpha": {"numerator": str(a1), "denominator": str(b1)},
        "norms": norms,
        "radicand": radicand,
        "d0_radicand": by_radicand,
        "d0_norms": by_norms,
        "d0": by_norms,
    }


def radial_local_terms(n: int, trunc: Optional[int] = None) -> Dict[str, Any]:
    """
    (S, poles) - (S, zeros off S) at a radial point, S being n distinct lines.

    The closed form n^2 - 2n is checked against a balanced equation of
    x dy - y dx adapted to the lines y = k x, k = 1..n.

    Raises:
        InvalidInput: If n < 1
        InvariantViolation: If the engine disagrees with n^2 - 2n
    """
    if n < 1:
        raise InvalidInput("the number of branches must be positive", details={"n": n})
    R = poly_ring(QQ)
    x, y = R.gens
    w = OneForm(-y, x)
    curve = R.one
    for k in range(1, n + 1):
        curve *= y - x * k
    tree = reduce(w)

    def compute(order: int) -> Dict[str, Any]:
        branches = newton_puiseux(curve, order)
        record = gsv_by_polars(w, tree, branches, order)
        return {"poles_term": record["poles_term"], "zeros_term": record["zeros_term"], "gsv": record["value"]}

    record = adaptive(compute, start=trunc)
    engine = record["poles_term"] - record["zeros_term"]
    closed = n * n - 2 * n
    if engine != closed:
        raise InvariantViolation(f"radial local terms for {n} lines", engine, closed)
    logger.debug("radial_local_terms", n=n, value=closed)
    return {"n": n, "closed_form": closed, "engine": engine, **record}
