# folpol/foliation/forms.py
"""
One-Forms - Local foliation germs a dx + b dy and their blow-ups
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import structlog
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from folpol.algebra.fields import roots_in_field
from folpol.algebra.intersection import Intersection, intersection_number
from folpol.algebra.poly import (
    coefficient,
    compose,
    deflate,
    dehomogenize,
    format_poly,
    homogeneous_part,
    order,
    poly_ring,
    swap,
    to_field,
    translate,
)
from folpol.algebra.puiseux import ChartPoint

logger = structlog.get_logger("forms")


@dataclass(frozen=True)
class OneForm:
    """
    The germ of a dx + b dy at the origin.

    ``divisors`` lists the coordinate axes that are exceptional curves
    at this point: "x" for {x = 0}, "y" for {y = 0}.
    """

    a: PolyElement
    b: PolyElement
    divisors: Tuple[str, ...] = field(default=())

    @property
    def field(self):
        return self.a.ring.domain

    @property
    def ring(self):
        return self.a.ring

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def to_field(self, K) -> "OneForm":
        return OneForm(to_field(self.a, K), to_field(self.b, K), self.divisors)

    def homogeneous(self, k: int) -> Tuple[PolyElement, PolyElement]:
        return homogeneous_part(self.a, k), homogeneous_part(self.b, k)

    def linear_part(self) -> Tuple[Any, Any, Any, Any]:
        """(a10, a01, b10, b01)."""
        return (
            coefficient(self.a, 1, 0),
            coefficient(self.a, 0, 1),
            coefficient(self.b, 1, 0),
            coefficient(self.b, 0, 1),
        )

    def translate(self, x0, y0) -> "OneForm":
        return OneForm(translate(self.a, x0, y0), translate(self.b, x0, y0), ())

    def swap(self) -> "OneForm":
        """The same foliation in the coordinates (y, x)."""
        flipped = tuple("y" if d == "x" else "x" for d in self.divisors)
        return OneForm(swap(self.b), swap(self.a), flipped)

    def deflate(self) -> "OneForm":
        a, b, _ = deflate(self.a, self.b)
        return OneForm(a, b, self.divisors)

    def with_divisors(self, divisors: Tuple[str, ...]) -> "OneForm":
        return OneForm(self.a, self.b, tuple(divisors))

    def format(self) -> str:
        parts = []
        if self.a:
            parts.append(f"({format_poly(self.a)}) dx")
        if self.b:
            parts.append(f"({format_poly(self.b)}) dy")
        return " + ".join(parts) if parts else "0 dx"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": format_poly(self.a),
            "b": format_poly(self.b),
            "divisors": list(self.divisors),
        }

    def __str__(self) -> str:
        return self.format()


# ============================================================================
# Local invariants
# ============================================================================

def multiplicity(w: OneForm) -> int:
    """nu_0(w) = min(order(a), order(b))."""
    value = min(order(w.a), order(w.b))
    if value == math.inf:
        raise ValueError("multiplicity of the zero form")
    return int(value)


def milnor(w: OneForm, seed: Optional[int] = None) -> Intersection:
    """Milnor number: intersection number of a and b at the origin."""
    if coefficient(w.a, 0, 0) or coefficient(w.b, 0, 0):
        return 0
    a10, a01, b10, b01 = w.linear_part()
    if a10 * b01 - a01 * b10:
        return 1
    return intersection_number(w.a, w.b, seed=seed)


def tangent_cone(w: OneForm) -> PolyElement:
    """x a_nu + y b_nu."""
    nu = multiplicity(w)
    a_nu, b_nu = w.homogeneous(nu)
    x, y = w.ring.gens
    return x * a_nu + y * b_nu


def is_dicritical_first_blowup(w: OneForm) -> bool:
    """True iff the first exceptional line is not invariant."""
    return not tangent_cone(w)


def _dicritical_factor(w: OneForm) -> PolyElement:
    """h with a_nu = y h and b_nu = -x h for a dicritical germ."""
    nu = multiplicity(w)
    a_nu, _ = w.homogeneous(nu)
    return a_nu.exquo(w.ring.gens[1])


def exceptional_centers(w: OneForm, dicritical: Optional[bool] = None) -> List[Any]:
    """
    X-chart points u = c of the exceptional line that need a visit:
    singular points of the transform, and tangency points when dicritical.
    """
    dicritical = is_dicritical_first_blowup(w) if dicritical is None else dicritical
    K = w.field
    if dicritical:
        return roots_in_field(dehomogenize(_dicritical_factor(w), K))
    return roots_in_field(dehomogenize(tangent_cone(w), K))


# ============================================================================
# Blow-ups
# ============================================================================

def pull_back(w: OneForm, chart: str, center: Any = None) -> Tuple[PolyElement, PolyElement]:
    """
    Undivided pull-back of w by the blow-up chart, translated to the center.

    X-chart: (x, y) -> (x, x (y + c)); Y-chart: (x, y) -> (x y, y).
    """
    R = w.ring
    x, y = R.gens
    if chart == "X":
        shifted = y + R.ground_new(center) if center else y
        a_pi = compose(w.a, x, x * shifted)
        b_pi = compose(w.b, x, x * shifted)
        return a_pi + shifted * b_pi, x * b_pi
    a_pi = compose(w.a, x * y, y)
    b_pi = compose(w.b, x * y, y)
    return y * a_pi, x * a_pi + b_pi


def _transform_divisors(w: OneForm, chart: str, center: Any) -> Tuple[str, ...]:
    if chart == "X":
        divisors = ["x"]
        if not center and "y" in w.divisors:
            divisors.append("y")
        return tuple(divisors)
    divisors = ["y"]
    if "x" in w.divisors:
        divisors.append("x")
    return tuple(divisors)


def blow_up(w: OneForm, chart: str, center: Any = None, dicritical: Optional[bool] = None) -> OneForm:
    """
    Transform of w at a point of the exceptional line.

    Args:
        w: Germ at the blown-up point
        chart: "X" or "Y"
        center: u-coordinate of the point in the X-chart
        dicritical: Precomputed dicritical flag of w

    Returns:
        The divided pull-back with updated divisor record
    """
    nu = multiplicity(w)
    dicritical = is_dicritical_first_blowup(w) if dicritical is None else dicritical
    k = nu + 1 if dicritical else nu
    a, b = pull_back(w, chart, center)
    x, y = w.ring.gens
    axis = x if chart == "X" else y
    divisor = axis ** k
    return OneForm(a.exquo(divisor), b.exquo(divisor), _transform_divisors(w, chart, center))


def linear_change(w: OneForm, matrix: Tuple[Tuple[Any, Any], Tuple[Any, Any]]) -> OneForm:
    """Pull-back of w by (x, y) -> (m11 x + m12 y, m21 x + m22 y)."""
    (m11, m12), (m21, m22) = matrix
    R = w.ring
    x, y = R.gens
    X = x * R.ground_new(m11) + y * R.ground_new(m12)
    Y = x * R.ground_new(m21) + y * R.ground_new(m22)
    a_phi = compose(w.a, X, Y)
    b_phi = compose(w.b, X, Y)
    return OneForm(
        a_phi * R.ground_new(m11) + b_phi * R.ground_new(m21),
        a_phi * R.ground_new(m12) + b_phi * R.ground_new(m22),
    )


def exceptional_points(w: OneForm, dicritical: Optional[bool] = None) -> List[ChartPoint]:
    """Points of the exceptional line worth visiting, the Y-origin always last."""
    points: List[ChartPoint] = [("X", c) for c in exceptional_centers(w, dicritical)]
    points.append(("Y", None))
    return points


def milnor_recursion(w: OneForm) -> Dict[str, Any]:
    """
    Both sides of mu = nu^2 -/+ nu - 1 + sum of the Milnor numbers along the
    exceptional line (minus for non-dicritical, plus for dicritical).
    """
    nu = multiplicity(w)
    dicritical = is_dicritical_first_blowup(w)
    mu = milnor(w)
    transform_mus = []
    for point in exceptional_points(w, dicritical):
        transform = blow_up(w, point[0], point[1], dicritical)
        value = milnor(transform)
        if value:
            transform_mus.append(value)
    sign = 1 if dicritical else -1
    rhs = nu * nu + sign * nu - 1 + sum(transform_mus)
    return {
        "mu": mu,
        "nu": nu,
        "dicritical": dicritical,
        "transform_mus": transform_mus,
        "rhs": rhs,
        "holds": mu == rhs,
    }
