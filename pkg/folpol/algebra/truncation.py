# folpol/algebra/truncation.py
"""
Truncation and Field Drivers - Adaptive precision and quadratic restarts
"""

from typing import Callable, Iterable, Optional, TypeVar

import structlog
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from folpol.algebra.fields import extend_for, field_label
from folpol.algebra.poly import total_degree
from folpol.core.config import settings
from folpol.core.exceptions import CeilingExceeded, NeedsAlgebraicExtension, TruncationInsufficient
from folpol.core.logging_config import FolpolLogger

logger = structlog.get_logger("truncation")

T = TypeVar("T")


def start_trunc(polys: Iterable[PolyElement] = ()) -> int:
    """N0 = 4 * (degree estimate + 4), unless TRUNC_START is configured."""
    if settings.TRUNC_START:
        return settings.TRUNC_START
    degree = max((total_degree(p) for p in polys if p), default=1)
    return 4 * (degree + 4)


def adaptive(
    fn: Callable[[int], T],
    start: Optional[int] = None,
    ceiling: Optional[int] = None,
) -> T:
    """
    Run fn(N) for N = N0, 2*N0, ... until it stops asking for more precision.

    Args:
        fn: Computation taking the truncation order
        start: First truncation order (defaults to 4 * (1 + 4))
        ceiling: Largest order tried (defaults to settings.TRUNC_CEILING)

    Returns:
        The first successful result

    Raises:
        CeilingExceeded: If the ceiling is reached without success
    """
    n = start or start_trunc()
    ceiling = ceiling or settings.TRUNC_CEILING
    while True:
        try:
            return fn(n)
        except TruncationInsufficient as exc:
            if n >= ceiling:
                raise CeilingExceeded(ceiling, "truncation order") from exc
            previous, n = n, min(2 * n, ceiling)
            FolpolLogger.log_truncation(previous, n, exc.message)


def over_fields(fn: Callable[[object], T], K=QQ) -> T:
    """
    Run fn(K); on a quadratic extension request over the rationals,
    restart once over Q(sqrt(radicand)).
    """
    try:
        return fn(K)
    except NeedsAlgebraicExtension as exc:
        if exc.radicand is None or K != QQ:
            raise
        extended = extend_for(K, exc.radicand)
        FolpolLogger.log_field_extension(exc.radicand)
        logger.info("field_restart", field=field_label(extended))
        return fn(extended)
