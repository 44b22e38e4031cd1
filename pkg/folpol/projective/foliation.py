# folpol/projective/foliation.py
"""
Projective Foliations - Charts, degree, invariance and singular locus of plane foliations
"""

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import structlog
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from folpol.algebra.fields import element, format_element, roots_in_field
from folpol.algebra.intersection import random_rational
from folpol.algebra.poly import diff_x, diff_y, format_poly, line_ring, poly_ring, to_field, total_degree
from folpol.core.config import settings
from folpol.core.exceptions import InvalidInput, InvariantViolation, LineNotGeneric
from folpol.core.logging_config import FolpolLogger
from folpol.foliation.forms import OneForm, milnor

logger = structlog.get_logger("projective")

CHARTS = ("z", "x", "y")


@lru_cache(maxsize=None)
def projective_ring(K=QQ):
    """K[X, Y, Z]."""
    R, _, _, _ = ring("X,Y,Z", K)
    return R


def homogenize(p: PolyElement, degree: int) -> PolyElement:
    """Z^degree p(X/Z, Y/Z) in K[X, Y, Z]."""
    H = projective_ring(p.ring.domain)
    return H.from_dict({(i, j, degree - i - j): c for (i, j), c in p.iterterms()})


def dehomogenize_chart(h: PolyElement, chart: str) -> PolyElement:
    """
    The affine expression of a homogeneous polynomial in a chart.

    Chart "z": (x, y) = (X, Y); chart "x": (x, y) = (Y, Z); chart "y": (x, y) = (X, Z).
    """
    R = poly_ring(h.ring.domain)
    terms: Dict[Tuple[int, int], Any] = {}
    for (i, j, k), c in h.iterterms():
        if chart == "z":
            monom = (i, j)
        elif chart == "x":
            monom = (j, k)
        else:
            monom = (i, k)
        terms[monom] = terms.get(monom, R.domain.zero) + c
    return R.from_dict({m: c for m, c in terms.items() if c})


def restrict_to_line(p: PolyElement, point: Tuple[Any, Any], direction: Tuple[Any, Any]) -> PolyElement:
    """p(x0 + t v1, y0 + t v2) in K[t]."""
    K = p.ring.domain
    T = line_ring(K, "t")
    t = T.gens[0]
    X = T.ground_new(point[0]) + t * direction[0]
    Y = T.ground_new(point[1]) + t * direction[1]
    result = T.zero
    for (i, j), c in p.iterterms():
        result += X ** i * Y ** j * c
    return result


@dataclass(frozen=True)
class ProjectiveFoliation:
    """A foliation of the projective plane given by a dx + b dy in the chart z = 1."""

    a: PolyElement
    b: PolyElement
    label: str = ""

    @property
    def field(self):
        return self.a.ring.domain

    def to_field(self, K) -> "ProjectiveFoliation":
        return ProjectiveFoliation(to_field(self.a, K), to_field(self.b, K), self.label)

    @cached_property
    def degree(self) -> int:
        """
        d = m, or m - 1 when x a_m + y b_m vanishes (the line at infinity is not invariant),
        m being the largest degree of a and b.
        """
        if not self.a and not self.b:
            raise InvalidInput("the zero form defines no foliation")
        m = max(total_degree(self.a), total_degree(self.b))
        x, y = self.a.ring.gens
        top_a = self.a.ring.from_dict({k: c for k, c in self.a.iterterms() if sum(k) == m})
        top_b = self.b.ring.from_dict({k: c for k, c in self.b.iterterms() if sum(k) == m})
        return m - 1 if not (x * top_a + y * top_b) else m

    @cached_property
    def homogeneous(self) -> Tuple[PolyElement, PolyElement, PolyElement]:
        """(P, Q, R) of degree d + 1 with X P + Y Q + Z R = 0."""
        d = self.degree
        P = homogenize(self.a, d + 1)
        Q = homogenize(self.b, d + 1)
        X, Y, Z = P.ring.gens
        R = -(X * P + Y * Q).exquo(Z)
        return P, Q, R

    def chart_form(self, chart: str) -> OneForm:
        if chart == "z":
            return OneForm(self.a, self.b)
        P, Q, R = self.homogeneous
        if chart == "x":
            return OneForm(dehomogenize_chart(Q, "x"), dehomogenize_chart(R, "x"))
        if chart == "y":
            return OneForm(dehomogenize_chart(P, "y"), dehomogenize_chart(R, "y"))
        raise InvalidInput(f"unknown chart {chart!r}", details={"charts": list(CHARTS)})

    def format(self) -> str:
        return OneForm(self.a, self.b).format()

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "form": self.format(), "degree": self.degree}


@dataclass(frozen=True)
class ProjectiveCurve:
    """An algebraic curve given by its equation in the chart z = 1."""

    equation: PolyElement

    @property
    def degree(self) -> int:
        return total_degree(self.equation)

    @cached_property
    def homogeneous(self) -> PolyElement:
        return homogenize(self.equation, self.degree)

    def to_field(self, K) -> "ProjectiveCurve":
        return ProjectiveCurve(to_field(self.equation, K))

    def in_chart(self, chart: str) -> PolyElement:
        if chart == "z":
            return self.equation
        return dehomogenize_chart(self.homogeneous, chart)

    def format(self) -> str:
        return format_poly(self.equation)


# ============================================================================
# Degree
# ============================================================================

def degree_of(F: ProjectiveFoliation, seed: Optional[int] = None) -> int:
    """
    Number of tangencies with a generic line, checked against the homogeneous bookkeeping.

    Raises:
        LineNotGeneric: If no sampled line is generic
        InvariantViolation: If a line shows more tangencies than the degree allows
    """
    K = F.field
    expected = F.degree
    rng = random.Random(settings.SEED if seed is None else seed)
    seen = -1
    for _ in range(settings.LINE_RETRIES):
        point = (element(K, random_rational(rng)), element(K, random_rational(rng)))
        direction = (element(K, random_rational(rng)), element(K, random_rational(rng)))
        tangency = restrict_to_line(F.a, point, direction) * direction[0] + restrict_to_line(F.b, point, direction) * direction[1]
        if not tangency:
            continue
        count = tangency.degree()
        if count == expected:
            return count
        seen = max(seen, count)
    if seen > expected:
        raise InvariantViolation("degree by tangencies", seen, expected)
    raise LineNotGeneric(settings.LINE_RETRIES)


# ============================================================================
# Invariant curves
# ============================================================================

def is_invariant(F: ProjectiveFoliation, S: ProjectiveCurve) -> bool:
    """Exact test: S divides a S_y - b S_x in every chart."""
    for chart in CHARTS:
        w = F.chart_form(chart)
        s = S.in_chart(chart)
        if s.is_ground:
            continue
        wedge = w.a * diff_y(s) - w.b * diff_x(s)
        if wedge.rem(s):
            return False
    return True


# ============================================================================
# Input given in another chart
# ============================================================================

# Chart x reads (x, y) = (Y, Z) and chart y reads (x, y) = (X, Z). A form typed
# in such a chart is homogenized as if it lived in the chart z = 1 of primed
# coordinates, then the primed coordinates are renamed back.
_RENAME = {
    "x": lambda i, j, k: (k, i, j),
    "y": lambda i, j, k: (i, k, j),
}


def _rename(h: PolyElement, chart: str) -> PolyElement:
    move = _RENAME[chart]
    return h.ring.from_dict({move(*m): c for m, c in h.iterterms()})


def from_chart(w: OneForm, chart: str = "z", label: str = "") -> ProjectiveFoliation:
    """The foliation whose expression in the given chart is w."""
    if chart == "z":
        return ProjectiveFoliation(w.a, w.b, label)
    if chart not in _RENAME:
        raise InvalidInput(f"unknown chart {chart!r}", details={"charts": list(CHARTS)})
    P1, Q1, R1 = ProjectiveFoliation(w.a, w.b).homogeneous
    if chart == "x":
        P, Q = R1, P1
    else:
        P, Q = P1, R1
    return ProjectiveFoliation(
        dehomogenize_chart(_rename(P, chart), "z"),
        dehomogenize_chart(_rename(Q, chart), "z"),
        label,
    )


def curve_from_chart(s: PolyElement, chart: str = "z") -> ProjectiveCurve:
    """The curve whose equation in the given chart is s."""
    if chart == "z":
        return ProjectiveCurve(s)
    if chart not in _RENAME:
        raise InvalidInput(f"unknown chart {chart!r}", details={"charts": list(CHARTS)})
    primed = ProjectiveCurve(s).homogeneous
    return ProjectiveCurve(dehomogenize_chart(_rename(primed, chart), "z"))


# ============================================================================
# Named families
# ============================================================================

def dicritical_pencil(p: int, q: int) -> Tuple[ProjectiveFoliation, ProjectiveCurve]:
    """
    The degree-one foliation p y dx - q x dy with first integral x^p z^(q-p) / y^q,
    and the invariant curve x^p - y^q.
    """
    if not 0 < p < q:
        raise InvalidInput("the pencil needs 0 < p < q", details={"p": p, "q": q})
    R = poly_ring(QQ)
    x, y = R.gens
    F = ProjectiveFoliation(y * p, x * (-q), label=f"pencil({p},{q})")
    S = ProjectiveCurve(x ** p - y ** q)
    return F, S


def lins_neto(alpha: Any = 0) -> ProjectiveFoliation:
    """Member omega + alpha eta of the degree-four pencil with 21 singular points."""
    alpha = Fraction(alpha)
    alpha = QQ(alpha.numerator, alpha.denominator)
    R = poly_ring(QQ)
    x, y = R.gens
    a = -y * (y ** 3 - 1) - x ** 2 * (y ** 3 - 1) * alpha
    b = x * (x ** 3 - 1) + y ** 2 * (x ** 3 - 1) * alpha
    return ProjectiveFoliation(a, b, label=f"lins_neto({alpha})")


# ============================================================================
# Singular locus
# ============================================================================

@dataclass(frozen=True)
class SingularPoint:
    """A singular point with its germ in the chart where it is analyzed."""

    chart: str
    coords: Tuple[Any, Any]
    germ: OneForm
    label: str = ""

    @property
    def field(self):
        return self.germ.field

    def homogeneous(self) -> Tuple[Any, Any, Any]:
        K = self.field
        u, v = self.coords
        if self.chart == "z":
            return (u, v, K.one)
        if self.chart == "x":
            return (K.one, u, v)
        return (u, K.one, v)

    @cached_property
    def milnor(self):
        return milnor(self.germ)

    def to_dict(self) -> Dict[str, Any]:
        K = self.field
        return {
            "label": self.label,
            "chart": self.chart,
            "point": "[" + " : ".join(format_element(K, c) for c in self.homogeneous()) + "]",
            "germ": self.germ.to_dict(),
            "milnor": self.milnor,
        }


def _univariate(p: PolyElement, fixed_index: int, value) -> PolyElement:
    """p with one variable fixed, as a polynomial in the other."""
    K = p.ring.domain
    U = line_ring(K, "s")
    terms: Dict[Tuple[int], Any] = {}
    for (i, j), c in p.iterterms():
        free, bound = (j, i) if fixed_index == 0 else (i, j)
        terms[(free,)] = terms.get((free,), K.zero) + (c * value ** bound if bound else c)
    return U.from_dict({m: c for m, c in terms.items() if c})


def _common_roots(a: PolyElement, b: PolyElement) -> List[Any]:
    g = a.gcd(b) if a and b else (a or b)
    if not g:
        raise InvalidInput("a line of singular points")
    return roots_in_field(g)


def affine_zeros(a: PolyElement, b: PolyElement) -> List[Tuple[Any, Any]]:
    """
    Common zeros of a and b in K^2.

    Raises:
        InvalidInput: If the common zero set is not finite
        NeedsAlgebraicExtension: If a zero lies outside the field
    """
    K = a.ring.domain
    if not a or not b:
        raise InvalidInput("singular locus is not finite")
    if not a.gcd(b).is_ground:
        raise InvalidInput("singular locus is not finite", details={"common_factor": format_poly(a.gcd(b))})
    Ryx, _, _ = ring("y,x", K)
    res = a.set_ring(Ryx).resultant(b.set_ring(Ryx))
    if not hasattr(res, "itermonoms"):
        return []
    zeros = []
    for x0 in roots_in_field(res):
        for y0 in _common_roots(_univariate(a, 0, x0), _univariate(b, 0, x0)):
            zeros.append((x0, y0))
    return zeros


def singular_locus(F: ProjectiveFoliation) -> List[SingularPoint]:
    """
    All singular points of F across the three charts.

    Finite points are analyzed in the chart z = 1, points [1 : u : 0] in the
    chart x = 1 and the point [0 : 1 : 0] in the chart y = 1.
    """
    K = F.field
    points: List[SingularPoint] = []

    w = F.chart_form("z")
    for x0, y0 in affine_zeros(w.a, w.b):
        points.append(SingularPoint("z", (x0, y0), w.translate(x0, y0)))

    wx = F.chart_form("x")
    line_a = _univariate(wx.a, 1, K.zero)
    line_b = _univariate(wx.b, 1, K.zero)
    if line_a or line_b:
        for u0 in _common_roots(line_a, line_b):
            points.append(SingularPoint("x", (u0, K.zero), wx.translate(u0, K.zero)))
    else:
        raise InvalidInput("the line at infinity is made of singular points")

    wy = F.chart_form("y")
    if not _constant(wy.a) and not _constant(wy.b):
        points.append(SingularPoint("y", (K.zero, K.zero), wy))

    labelled = [
        SingularPoint(p.chart, p.coords, p.germ, label=f"p{idx}") for idx, p in enumerate(points, start=1)
    ]
    for p in labelled:
        FolpolLogger.log_singular_point(p.chart, str([format_element(K, c) for c in p.coords]), p.milnor)
    return labelled


def _constant(p: PolyElement):
    return p.get((0, 0), p.ring.domain.zero)


def bezout_check(F: ProjectiveFoliation, points: Optional[List[SingularPoint]] = None) -> Dict[str, Any]:
    """Sum of the Milnor numbers against d^2 + d + 1."""
    points = singular_locus(F) if points is None else points
    d = F.degree
    total = sum(p.milnor for p in points)
    expected = d * d + d + 1
    return {
        "degree": d,
        "points": [p.to_dict() for p in points],
        "milnor_sum": total,
        "expected": expected,
        "holds": total == expected,
    }
