# folpol/foliation/singularity.py
"""
Singularity Classification - Regular, non-degenerate, saddle-node or not reduced
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import structlog
import sympy

from folpol.algebra.fields import format_element, rational_sqrt, roots_in_field, to_rational
from folpol.algebra.poly import line_ring
from folpol.algebra.truncation import adaptive
from folpol.foliation.forms import OneForm, multiplicity

logger = structlog.get_logger("singularity")

Direction = Tuple[Any, Any]


@dataclass(frozen=True)
class SingClass:
    kind = "unknown"

    @property
    def is_reduced(self) -> bool:
        return self.kind != "not_reduced"

    @property
    def is_singular(self) -> bool:
        return self.kind != "regular"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind}


@dataclass(frozen=True)
class Regular(SingClass):
    kind = "regular"


@dataclass(frozen=True)
class NonDegenerate(SingClass):
    """Linear part with eigenvalue ratio outside the positive rationals."""

    ratio: Any = None
    ratios: Tuple[Any, Any] = (None, None)

    kind = "non_degenerate"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "lambda": str(self.ratio), "ratios": [str(r) for r in self.ratios]}


@dataclass(frozen=True)
class SaddleNode(SingClass):
    weak_direction: Direction = (None, None)
    strong_direction: Direction = (None, None)
    weak_index: int = 2

    kind = "saddle_node"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "weak_direction": [str(c) for c in self.weak_direction],
            "strong_direction": [str(c) for c in self.strong_direction],
            "weak_index": self.weak_index,
        }


@dataclass(frozen=True)
class NotReduced(SingClass):
    reason: str = ""

    kind = "not_reduced"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "reason": self.reason}


# ============================================================================
# Linear algebra of the dual vector field b d/dx - a d/dy
# ============================================================================

def linear_matrix(w: OneForm) -> Tuple[Tuple[Any, Any], Tuple[Any, Any]]:
    a10, a01, b10, b01 = w.linear_part()
    return ((b10, b01), (-a10, -a01))


def trace_det(w: OneForm) -> Tuple[Any, Any]:
    (j11, j12), (j21, j22) = linear_matrix(w)
    return j11 + j22, j11 * j22 - j12 * j21


def eigenvector(w: OneForm, eigenvalue) -> Optional[Direction]:
    """Eigenvector of the linear part for a known eigenvalue; None if every vector is one."""
    (j11, j12), (j21, j22) = linear_matrix(w)
    rows = ((j11 - eigenvalue, j12), (j21, j22 - eigenvalue))
    for r1, r2 in rows:
        if r1 or r2:
            return (r2, -r1)
    return None


def eigen_directions(w: OneForm) -> List[Tuple[Any, Direction]]:
    """
    Eigenvalues of the linear part with their eigen-directions.

    Raises:
        NeedsAlgebraicExtension: If the eigenvalues are not in the field
    """
    K = w.field
    trace, det = trace_det(w)
    U = line_ring(K)
    u = U.gens[0]
    char = u ** 2 - u * U.ground_new(trace) + U.ground_new(det)
    roots = roots_in_field(char)
    if len(roots) == 1:
        roots = roots * 2
    result = []
    for lam in roots:
        v = eigenvector(w, lam)
        if v is not None:
            result.append((lam, v))
    return result


def ratio_is_positive_rational(trace, det, K) -> bool:
    """Exact test of lambda in Q+ through s = lambda + 1/lambda = (T^2 - 2D)/D."""
    s = to_rational(K, K.quo(trace * trace - 2 * det, det))
    if s is None or s <= 0:
        return False
    return rational_sqrt(s * s - 4) is not None


def _ratio_expressions(trace, det, K) -> Tuple[Any, Any]:
    s = K.to_sympy(K.quo(trace * trace - 2 * det, det))
    root = sympy.sqrt(s * s - 4)
    first = sympy.radsimp((s + root) / 2)
    second = sympy.radsimp((s - root) / 2)
    if sympy.Abs(second).evalf() > sympy.Abs(first).evalf():
        first, second = second, first
    return first, second


# ============================================================================
# Classification
# ============================================================================

def classify(w: OneForm, trunc: Optional[int] = None) -> SingClass:
    """
    Classify the singularity of w at the origin.

    Args:
        w: Germ
        trunc: Fixed truncation order for the weak index (adaptive when None)

    Returns:
        Regular, NonDegenerate, SaddleNode or NotReduced
    """
    nu = multiplicity(w)
    if nu == 0:
        return Regular()
    if nu >= 2:
        return NotReduced(reason=f"multiplicity {nu}")

    K = w.field
    trace, det = trace_det(w)
    if det:
        if ratio_is_positive_rational(trace, det, K):
            return NotReduced(reason="eigenvalue ratio in Q+")
        first, second = _ratio_expressions(trace, det, K)
        return NonDegenerate(ratio=first, ratios=(first, second))

    if not trace:
        return NotReduced(reason="nilpotent linear part")

    weak = eigenvector(w, K.zero)
    strong = eigenvector(w, trace)
    index = weak_index(w, weak, trunc)
    return SaddleNode(weak_direction=weak, strong_direction=strong, weak_index=index)


def weak_index(w: OneForm, weak: Direction, trunc: Optional[int] = None) -> int:
    """Tangency index of w along its weak invariant curve."""
    from folpol.foliation.leaves import invariant_curve_jet, tangency_index

    def compute(n: int) -> int:
        curve = invariant_curve_jet(w, weak, n)
        return tangency_index(w, curve)

    if trunc:
        return compute(trunc)
    return adaptive(compute, start=8)


def describe_direction(K, direction: Optional[Direction]) -> str:
    if direction is None:
        return "any"
    return f"({format_element(K, direction[0])}, {format_element(K, direction[1])})"
