# folpol/algebra/poly.py
"""
Bivariate Polynomials - Helpers over sympy sparse polynomials in x, y
"""

import math
from functools import lru_cache
from typing import Any, List, Tuple

import structlog
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from folpol.algebra.fields import element

logger = structlog.get_logger("poly")

# A bivariate polynomial is a sympy PolyElement of poly_ring(K).
BivariatePoly = PolyElement


@lru_cache(maxsize=None)
def poly_ring(K=QQ):
    """The ring K[x, y]."""
    R, _, _ = ring("x,y", K)
    return R


@lru_cache(maxsize=None)
def line_ring(K=QQ, name: str = "u"):
    """A univariate ring K[name]."""
    R, _ = ring(name, K)
    return R


def gens(K=QQ) -> Tuple[PolyElement, PolyElement]:
    R = poly_ring(K)
    return R.gens[0], R.gens[1]


def to_field(p: PolyElement, K) -> PolyElement:
    """Move p into K[x, y]."""
    return p.set_ring(poly_ring(K))


def constant(K, value: Any) -> PolyElement:
    return poly_ring(K).ground_new(element(K, value))


def order(p: PolyElement) -> float:
    """Least total degree of a term; infinite for the zero polynomial."""
    if not p:
        return math.inf
    return min(i + j for (i, j) in p.itermonoms())


def total_degree(p: PolyElement) -> int:
    if not p:
        return -1
    return max(i + j for (i, j) in p.itermonoms())


def homogeneous_part(p: PolyElement, k: int) -> PolyElement:
    R = p.ring
    return R.from_dict({m: c for m, c in p.iterterms() if m[0] + m[1] == k})


def initial_form(p: PolyElement) -> PolyElement:
    """Homogeneous part of lowest degree."""
    k = order(p)
    if k == math.inf:
        return p
    return homogeneous_part(p, int(k))


def coefficient(p: PolyElement, i: int, j: int):
    return p.get((i, j), p.ring.domain.zero)


def diff_x(p: PolyElement) -> PolyElement:
    return p.diff(p.ring.gens[0])


def diff_y(p: PolyElement) -> PolyElement:
    return p.diff(p.ring.gens[1])


def compose(p: PolyElement, X: PolyElement, Y: PolyElement) -> PolyElement:
    """p(X, Y) for polynomials X, Y of the same ring."""
    x, y = p.ring.gens
    return p.compose([(x, X), (y, Y)])


def translate(p: PolyElement, x0, y0) -> PolyElement:
    """p(x + x0, y + y0)."""
    R = p.ring
    x, y = R.gens
    return compose(p, x + R.ground_new(x0), y + R.ground_new(y0))


def swap(p: PolyElement) -> PolyElement:
    """p(y, x)."""
    x, y = p.ring.gens
    return compose(p, y, x)


def dehomogenize(h: PolyElement, K=None) -> PolyElement:
    """h(1, u) in K[u] for a homogeneous h(x, y)."""
    K = K or h.ring.domain
    U = line_ring(K)
    return U.from_dict({(j,): c for (i, j), c in h.iterterms()})


def is_unit_at_origin(p: PolyElement) -> bool:
    return bool(coefficient(p, 0, 0))


def deflate(a: PolyElement, b: PolyElement) -> Tuple[PolyElement, PolyElement, PolyElement]:
    """
    Remove the common factor of a and b.

    Returns:
        (a / g, b / g, g) with g = gcd(a, b)
    """
    if not a or not b:
        g = a or b
        if not g:
            return a, b, g
        return a.exquo(g) if a else a, b.exquo(g) if b else b, g
    g = a.gcd(b)
    if g.is_ground:
        return a, b, g
    logger.debug("form_deflated", factor=format_poly(g))
    return a.exquo(g), b.exquo(g), g


def vanishes_doubly(f: PolyElement) -> bool:
    """True when f has a repeated factor through the origin."""
    g = f.gcd(diff_x(f)).gcd(diff_y(f))
    return not g.is_ground and not is_unit_at_origin(g)


# ============================================================================
# Printing
# ============================================================================

def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _coeff_text(K, c) -> str:
    expr = K.to_sympy(c)
    if expr.is_Rational:
        return str(expr)
    return f"({expr})"


def format_poly(p: PolyElement) -> str:
    """
    Print p in the input grammar: ascending total degree, x before y.

    Args:
        p: Bivariate polynomial

    Returns:
        String such as "x^2 - 3/2*y^3"
    """
    if not p:
        return "0"
    K = p.ring.domain
    terms = sorted(p.iterterms(), key=lambda mc: (mc[0][0] + mc[0][1], -mc[0][0]))
    pieces: List[str] = []
    for (i, j), c in terms:
        expr = K.to_sympy(c)
        negative = expr.is_Rational and expr < 0
        magnitude = -c if negative else c
        mono = _monomial_text(i, j)
        if mono and magnitude == K.one:
            body = mono
        elif mono:
            body = f"{_coeff_text(K, magnitude)}*{mono}"
        else:
            body = _coeff_text(K, magnitude)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
