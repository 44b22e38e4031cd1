# folpol/algebra/puiseux.py
"""
Branches - Newton-Puiseux expansion by blow-ups and truncated branch equations
"""

import dataclasses
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

import structlog
from sympy.polys.ring_series import rs_mul, rs_trunc
from sympy.polys.rings import PolyElement

from folpol.algebra.fields import format_element, roots_in_field
from folpol.algebra.poly import (
    coefficient,
    compose,
    dehomogenize,
    diff_y,
    format_poly,
    initial_form,
    line_ring,
    order,
    poly_ring,
    swap,
    vanishes_doubly,
)
from folpol.algebra.series import (
    PuiseuxSeries,
    _newton_steps,
    checked_order,
    compose_poly,
    eval_truncated,
    series_ring,
)
from folpol.core.config import settings
from folpol.core.exceptions import CeilingExceeded, NotSquareFree, TruncationInsufficient

logger = structlog.get_logger("puiseux")

# ("X", c) is the point u = c of the chart (x, y) -> (x, x*u);
# ("Y", None) is the origin of the chart (x, y) -> (x*y, y).
ChartPoint = Tuple[str, Any]


@dataclass(frozen=True)
class BranchEquation:
    """Weierstrass polynomial of a branch, exact modulo axis^precision."""

    poly: PolyElement
    axis: str
    precision: int


@dataclass(frozen=True)
class Branch:
    """An irreducible (formal) curve germ given by a parametrization."""

    x: PuiseuxSeries
    y: PuiseuxSeries
    tag: str = "branch"
    formal: bool = False
    component: Optional[int] = None
    label: str = ""

    @property
    def field(self):
        return self.x.field

    @property
    def prec(self) -> int:
        return min(self.x.prec, self.y.prec)

    @property
    def multiplicity(self) -> int:
        m = min(self.x.valuation, self.y.valuation)
        if m >= self.prec - settings.TRUNC_SLACK:
            raise TruncationInsufficient(self.prec, "branch multiplicity")
        return m

    @property
    def ramification(self) -> int:
        return self.multiplicity

    @cached_property
    def equation(self) -> BranchEquation:
        return weierstrass_equation(self.x, self.y)

    def equation_bound(self, other: "Branch", derivative: bool = False) -> float:
        """Exponent below which this branch's equation is exact along other."""
        eq = self.equation
        axis_series = other.x if eq.axis == "x" else other.y
        depth = eq.precision - (1 if derivative else 0)
        if axis_series.is_known_zero():
            return float("inf")
        return depth * axis_series.valuation

    def retag(self, **changes: Any) -> "Branch":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "label": self.label,
            "tag": self.tag,
            "formal": self.formal,
            "x": self.x.to_dict(),
            "y": self.y.to_dict(),
        }
        if self.component is not None:
            data["component"] = self.component
        try:
            data["multiplicity"] = self.multiplicity
            data["equation"] = format_poly(self.equation.poly)
        except TruncationInsufficient:
            pass
        return data


# ============================================================================
# Parametrized branches under blow-ups
# ============================================================================

def branch_tangent(branch: Branch) -> ChartPoint:
    """
    Direction of the branch at the origin as a point of the exceptional line.

    Returns:
        ("X", c) when the tangent is y = c*x, ("Y", None) when it is x = 0
    """
    K = branch.field
    m = branch.multiplicity
    xm, ym = branch.x.coeff(m), branch.y.coeff(m)
    if xm:
        return ("X", K.quo(ym, xm))
    return ("Y", None)


def lift_param(xs: PuiseuxSeries, ys: PuiseuxSeries, point: ChartPoint) -> Tuple[PuiseuxSeries, PuiseuxSeries]:
    """Strict transform of a parametrization through a chart point."""
    chart, center = point
    if chart == "X":
        u = ys / xs
        if center:
            u = u - center
        return xs, u
    return xs / ys, ys


def push_param(xs: PuiseuxSeries, ys: PuiseuxSeries, point: ChartPoint) -> Tuple[PuiseuxSeries, PuiseuxSeries]:
    """Image of a chart parametrization under the blow-up map."""
    chart, center = point
    if chart == "X":
        shifted = ys + center if center else ys
        return xs, xs * shifted
    return xs * ys, ys


def blow_up_branch(branch: Branch, chart: str, center: Any = None) -> Branch:
    """
    Strict transform of a branch in the given chart; precision drops by the multiplicity.

    Args:
        branch: Branch at the origin
        chart: "X" or "Y"
        center: Point u = center of the X-chart

    Returns:
        Branch in the chart coordinates translated to the center
    """
    xs, ys = lift_param(branch.x, branch.y, (chart, center))
    return dataclasses.replace(branch, x=xs, y=ys)


# ============================================================================
# Newton-Puiseux by blow-ups
# ============================================================================

def curve_transform(f: PolyElement, point: ChartPoint) -> PolyElement:
    """Strict transform f o pi / axis^m of a curve at a chart point."""
    R = f.ring
    x, y = R.gens
    m = int(order(f))
    chart, center = point
    if chart == "X":
        shift = y + R.ground_new(center) if center else y
        return compose(f, x, x * shift).exquo(x ** m)
    return compose(f, x * y, y).exquo(y ** m)


def curve_points(f: PolyElement) -> List[ChartPoint]:
    """Points of the exceptional line met by the strict transform of f."""
    K = f.ring.domain
    fm = initial_form(f)
    m = int(order(f))
    points: List[ChartPoint] = [("X", c) for c in roots_in_field(dehomogenize(fm, K))]
    if not coefficient(fm, 0, m):
        points.append(("Y", None))
    return points


def _graph(f: PolyElement, trunc: int) -> PolyElement:
    """Representative of phi with f(t, phi(t)) = 0 mod t^trunc, f_y(0, 0) != 0."""
    K = f.ring.domain
    R = series_ring(K)
    t = R.gens[0]
    fy = diff_y(f)
    phi = R.zero
    for step in _newton_steps(trunc):
        value = eval_truncated(f, t, phi, step)
        slope = PuiseuxSeries(eval_truncated(fy, t, phi, step), step).inverse().rep
        phi = rs_trunc(phi - rs_mul(value, slope, t, step), t, step)
    return phi


def _smooth_param(f: PolyElement, trunc: int) -> Tuple[PuiseuxSeries, PuiseuxSeries]:
    K = f.ring.domain
    t = series_ring(K).gens[0]
    if coefficient(f, 0, 1):
        return PuiseuxSeries(t, trunc), PuiseuxSeries(_graph(f, trunc), trunc)
    return PuiseuxSeries(_graph(swap(f), trunc), trunc), PuiseuxSeries(t, trunc)


def _expand(f: PolyElement, trunc: int, depth: int) -> List[Tuple[PuiseuxSeries, PuiseuxSeries]]:
    m = order(f)
    if m == 0:
        return []
    if m == 1:
        return [_smooth_param(f, trunc)]
    if depth > 4 * settings.MAX_BLOWUPS:
        raise CeilingExceeded(4 * settings.MAX_BLOWUPS, "curve blow-ups")
    params = []
    for point in curve_points(f):
        for xs, ys in _expand(curve_transform(f, point), trunc, depth + 1):
            params.append(push_param(xs, ys, point))
    return params


def newton_puiseux(f: PolyElement, trunc: int) -> List[Branch]:
    """
    Branches of the curve f = 0 at the origin.

    Args:
        f: Square-free polynomial vanishing at the origin
        trunc: Truncation order of the parametrizations

    Returns:
        One Branch per irreducible branch over the coefficient field

    Raises:
        NotSquareFree: If f has a repeated factor through the origin
        NeedsAlgebraicExtension: If a branch needs coefficients outside the field
    """
    if not f or coefficient(f, 0, 0):
        return []
    if vanishes_doubly(f):
        raise NotSquareFree(format_poly(f))
    branches = [Branch(xs, ys) for xs, ys in _expand(f, trunc, 0)]
    logger.debug("curve_expanded", curve=format_poly(f), branches=len(branches), trunc=trunc)
    return branches


# ============================================================================
# Branch equations
# ============================================================================

def weierstrass_equation(xs: PuiseuxSeries, ys: PuiseuxSeries) -> BranchEquation:
    """
    Truncated Weierstrass polynomial of a parametrized branch.

    The variable of smaller order is used as the axis; the returned
    polynomial is monic of degree e in the other variable.
    """
    if ys.valuation < xs.valuation:
        eq = _weierstrass(ys, xs)
        return BranchEquation(swap(eq.poly), "y", eq.precision)
    return _weierstrass(xs, ys)


def _weierstrass(xs: PuiseuxSeries, ys: PuiseuxSeries) -> BranchEquation:
    K = xs.field
    R = poly_ring(K)
    X, Y = R.gens
    e = xs.valuation
    n_total = min(xs.prec, ys.prec)
    if e >= n_total - 1:
        raise TruncationInsufficient(n_total, "branch equation")
    c = xs.coeff(e)
    inv_c = K.quo(K.one, c)
    ytil = _reparametrize(xs, ys)
    n_s = ytil.prec

    S = series_ring(K)
    s = S.gens[0]
    ytil_rep = ytil.rep

    if e == 1:
        poly = Y - R.from_dict({(n, 0): cn * inv_c ** n for n, cn in ytil.coefficients()})
        return BranchEquation(poly, "x", n_s)

    m_prec = (n_s - 1) // e + 1
    L = line_ring(K, "x")
    lx = L.gens[0]

    power_sums: List[PolyElement] = []
    y_power = S.one
    for k in range(1, e + 1):
        y_power = rs_mul(y_power, ytil_rep, s, n_s)
        terms = {}
        for j in range(m_prec):
            cj = y_power.get((j * e,), K.zero)
            if cj:
                terms[(j,)] = cj * inv_c ** j * K.convert(e)
        power_sums.append(L.from_dict(terms))

    # Newton identities
    elementary = [L.one]
    for k in range(1, e + 1):
        acc = L.zero
        for i in range(1, k + 1):
            term = rs_mul(elementary[k - i], power_sums[i - 1], lx, m_prec)
            acc = acc + term if i % 2 == 1 else acc - term
        elementary.append(acc.mul_ground(K.quo(K.one, K.convert(k))))

    poly = R.zero
    for k, ek in enumerate(elementary):
        lifted = R.from_dict({(i, 0): ci for (i,), ci in ek.iterterms()})
        sign = -1 if k % 2 else 1
        poly += lifted * Y ** (e - k) * sign
    return BranchEquation(poly, "x", m_prec)


def _reparametrize(xs: PuiseuxSeries, ys: PuiseuxSeries) -> PuiseuxSeries:
    """
    y in the parameter s with x = c s^e, where e = ord x and c its leading coefficient.

    Lagrange inversion of s = t (1 + h)^(1/e): [s^n] y = (1/n) [t^(n-1)] y'(t) v(t)^n
    with v = (1 + h)^(-1/e). Coefficients are exact for n <= prec - e.
    """
    K = xs.field
    e = xs.valuation
    n_total = min(xs.prec, ys.prec)
    unit = xs.shift(-e).scale(K.quo(K.one, xs.coeff(e)))
    v = unit.inverse_root(e).rep
    t = v.ring.gens[0]
    dy = ys.derivative().rep
    n_s = n_total - e + 1

    coeffs: Dict[int, Any] = {}
    v_power = v.ring.one
    for n in range(1, n_s):
        v_power = rs_mul(v_power, v, t, n)
        total = K.zero
        for (k,), ck in dy.iterterms():
            if k <= n - 1:
                total += ck * v_power.get((n - 1 - k,), K.zero)
        if total:
            coeffs[n] = K.quo(total, K.convert(n))
    return PuiseuxSeries.from_coeffs(coeffs, n_s, K, ramification=e)


def order_along(p: PolyElement, branch: Branch, limit: Optional[float] = None, context: str = "") -> int:
    """Certified order of p restricted to the branch."""
    return checked_order(compose_poly(p, branch.x, branch.y), limit=limit, context=context)


def describe_point(K, point: ChartPoint) -> str:
    chart, center = point
    if chart == "Y":
        return "Y:0"
    return f"X:{format_element(K, center)}"
