# folpol/projective/poincare.py
"""
Global Identities - Poincare bound and Brunella identity from local balanced equations
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, TypeVar

import structlog
from sympy.polys.rings import PolyElement

from folpol.algebra.fields import format_element
from folpol.algebra.poly import coefficient, translate
from folpol.algebra.puiseux import Branch, newton_puiseux
from folpol.algebra.truncation import adaptive, start_trunc
from folpol.core.config import settings
from folpol.core.exceptions import InvariantViolation, NotInvariant
from folpol.core.logging_config import FolpolLogger
from folpol.polar.excess import is_generalized_curve_polar
from folpol.polar.gsv import gsv_by_polars, gsv_direct
from folpol.projective.foliation import (
    ProjectiveCurve,
    ProjectiveFoliation,
    SingularPoint,
    is_invariant,
    singular_locus,
)
from folpol.reduction.invariants import is_generalized_curve_tree
from folpol.reduction.reducer import reduce

logger = structlog.get_logger("poincare")

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class PointAnalysis:
    """Local data of F and S at one singular point of F on S."""

    point: SingularPoint
    branches: int
    correction: int
    poles_term: int
    zeros_term: int
    gsv: int
    gsv_direct: int
    var: int
    generalized_curve: bool
    generalized_curve_tree: bool
    trunc: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.point.to_dict(),
            "branches": self.branches,
            "correction": self.correction,
            "poles_term": self.poles_term,
            "zeros_term": self.zeros_term,
            "gsv": self.gsv,
            "gsv_direct": self.gsv_direct,
            "var": self.var,
            "generalized_curve": self.generalized_curve,
            "trunc": self.trunc,
        }


def fan_out(fn: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Map fn over items, on a thread pool when more than one worker is configured; order is kept."""
    workers = settings.WORKERS if workers is None else workers
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def local_curve(S: ProjectiveCurve, point: SingularPoint) -> PolyElement:
    """Equation of S in the chart of the point, moved to the origin."""
    return translate(S.in_chart(point.chart), *point.coords)


def points_on_curve(S: ProjectiveCurve, points: Sequence[SingularPoint]) -> List[SingularPoint]:
    return [p for p in points if not coefficient(local_curve(S, p), 0, 0)]


def analyze_point(
    point: SingularPoint,
    S: ProjectiveCurve,
    seed: Optional[int] = None,
    max_blowups: Optional[int] = None,
) -> PointAnalysis:
    """
    Local analysis at a point of sing(F) on S.

    A balanced equation adapted to the local branches of S gives the
    correction term (S, poles) - (S, zeros off S) and the GSV index.
    """
    w = point.germ
    s = local_curve(S, point)
    tree = reduce(w, max_blowups)

    def compute(trunc: int) -> PointAnalysis:
        # Step 1: Local branches of S
        branches: List[Branch] = [
            b.retag(label=f"S@{point.label}.{idx}") for idx, b in enumerate(newton_puiseux(s, trunc), start=1)
        ]

        # Step 2: Adapted balanced equation and the GSV index
        record = gsv_by_polars(w, tree, branches, trunc, seed)
        direct = gsv_direct(w, branches)
        if direct != record["value"]:
            raise InvariantViolation(f"gsv at {point.label}", direct, record["value"])

        # Step 3: Generalized-curve test
        polar_test = is_generalized_curve_polar(w, tree, trunc, seed)
        tree_test = is_generalized_curve_tree(tree)
        if polar_test != tree_test:
            raise InvariantViolation(f"generalized curve at {point.label}", polar_test, tree_test)

        return PointAnalysis(
            point=point,
            branches=len(branches),
            correction=record["poles_term"] - record["zeros_term"],
            poles_term=record["poles_term"],
            zeros_term=record["zeros_term"],
            gsv=record["value"],
            gsv_direct=direct,
            var=record["var"],
            generalized_curve=polar_test,
            generalized_curve_tree=tree_test,
            trunc=trunc,
        )

    analysis = adaptive(compute, start=start_trunc([w.a, w.b, s]))
    logger.debug(
        "point_analyzed",
        point=analysis.point.label,
        correction=analysis.correction,
        gsv=analysis.gsv,
    )
    return analysis


def _analyses(
    F: ProjectiveFoliation,
    S: ProjectiveCurve,
    seed: Optional[int],
    max_blowups: Optional[int],
    points: Optional[List[SingularPoint]],
    workers: Optional[int] = None,
) -> List[PointAnalysis]:
    if not is_invariant(F, S):
        raise NotInvariant(S.format())
    points = singular_locus(F) if points is None else points
    on_curve = points_on_curve(S, points)
    return fan_out(lambda p: analyze_point(p, S, seed, max_blowups), on_curve, workers)


def _format_fraction(value: Fraction) -> Any:
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def poincare_bound(
    F: ProjectiveFoliation,
    S: ProjectiveCurve,
    seed: Optional[int] = None,
    max_blowups: Optional[int] = None,
    points: Optional[List[SingularPoint]] = None,
    workers: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Evaluate d0 <= d + 2 + (1/d0) * sum of the local corrections.

    Args:
        F: Projective foliation
        S: Invariant curve of degree d0
        seed: Seed of the generic samples
        max_blowups: Blow-up ceiling of the local reductions
        points: Singular locus of F, when already known
        workers: Threads for the per-point analyses (settings.WORKERS when None)

    Returns:
        Bound report with the per-point corrections and the equality flag

    Raises:
        NotInvariant: If S is not invariant by F
        InvariantViolation: If the bound fails, or fails to be an equality
            when every germ on S is a generalized curve
    """
    d = F.degree
    d0 = S.degree
    analyses = _analyses(F, S, seed, max_blowups, points, workers)

    total = sum(a.correction for a in analyses)
    rhs = Fraction(d + 2) + Fraction(total, d0)
    all_generalized = all(a.generalized_curve for a in analyses)
    if d0 > rhs:
        raise InvariantViolation("poincare bound", d0, rhs)
    if all_generalized and d0 != rhs:
        raise InvariantViolation("poincare equality", d0, rhs)

    FolpolLogger.log_invariant("poincare_bound", str(rhs), d=d, d0=d0, equality=d0 == rhs)
    return {
        "degree": d,
        "d0": d0,
        "curve": S.format(),
        "points": [a.to_dict() for a in analyses],
        "correction_sum": total,
        "bound_rhs": _format_fraction(rhs),
        "holds": True,
        "equality": d0 == rhs,
        "all_generalized_curve": all_generalized,
    }


def brunella_identity(
    F: ProjectiveFoliation,
    S: ProjectiveCurve,
    seed: Optional[int] = None,
    max_blowups: Optional[int] = None,
    points: Optional[List[SingularPoint]] = None,
    workers: Optional[int] = None,
) -> Dict[str, Any]:
    """(d + 2 - d0) d0 against the sum of the local GSV indices along S."""
    d = F.degree
    d0 = S.degree
    analyses = _analyses(F, S, seed, max_blowups, points, workers)
    total = sum(a.gsv for a in analyses)
    expected = (d + 2 - d0) * d0
    FolpolLogger.log_invariant("brunella_identity", total, expected=expected)
    return {
        "degree": d,
        "d0": d0,
        "curve": S.format(),
        "ledger": [
            {
                "point": a.point.label,
                "coords": [format_element(a.point.field, c) for c in a.point.homogeneous()],
                "gsv": a.gsv,
                "gsv_direct": a.gsv_direct,
            }
            for a in analyses
        ],
        "gsv_sum": total,
        "expected": expected,
        "holds": total == expected,
    }
