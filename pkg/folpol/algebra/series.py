# folpol/algebra/series.py
"""
Truncated Series - Power series in one parameter with tracked precision
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import structlog
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_trunc
from sympy.polys.rings import PolyElement, ring

from folpol.core.config import settings
from folpol.core.exceptions import TruncationInsufficient

logger = structlog.get_logger("series")


@lru_cache(maxsize=None)
def series_ring(K=QQ):
    """The ring K[t] holding series representatives."""
    R, _ = ring("t", K)
    return R


def _newton_steps(prec: int) -> List[int]:
    steps = [prec]
    while steps[-1] > 1:
        steps.append((steps[-1] + 1) // 2)
    return list(reversed(steps[:-1]))


@dataclass(frozen=True)
class PuiseuxSeries:
    """
    Sum of c_n t^(n/ramification) known modulo t^(prec/ramification).

    Arithmetic is carried out on the representative ``rep`` in K[t];
    every operation derives the precision of its result from the
    precisions and orders of its operands.
    """

    rep: PolyElement
    prec: int
    ramification: int = 1

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Dict[int, Any], prec: int, K=QQ, ramification: int = 1) -> "PuiseuxSeries":
        R = series_ring(K)
        rep = R.from_dict({(n,): c for n, c in coeffs.items() if n < prec})
        return cls(rep, prec, ramification)

    @classmethod
    def from_poly(cls, rep: PolyElement, prec: int, ramification: int = 1) -> "PuiseuxSeries":
        t = rep.ring.gens[0]
        return cls(rs_trunc(rep, t, prec), prec, ramification)

    @classmethod
    def monomial(cls, K, coeff, n: int, prec: int) -> "PuiseuxSeries":
        R = series_ring(K)
        rep = R.term_new((n,), coeff) if n < prec else R.zero
        return cls(rep, prec)

    @classmethod
    def zero(cls, K, prec: int) -> "PuiseuxSeries":
        return cls(series_ring(K).zero, prec)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def field(self):
        return self.rep.ring.domain

    @property
    def t(self) -> PolyElement:
        return self.rep.ring.gens[0]

    @property
    def valuation(self) -> int:
        """Least stored exponent, or prec when nothing is known to be nonzero."""
        if not self.rep:
            return self.prec
        return min(m[0] for m in self.rep.itermonoms())

    def coeff(self, n: int):
        return self.rep.get((n,), self.field.zero)

    def coefficients(self) -> List[Tuple[int, Any]]:
        return sorted(((m[0], c) for m, c in self.rep.iterterms()), key=lambda nc: nc[0])

    def is_known_zero(self) -> bool:
        return not self.rep

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def truncate(self, prec: int) -> "PuiseuxSeries":
        prec = min(prec, self.prec)
        return PuiseuxSeries(rs_trunc(self.rep, self.t, prec), prec, self.ramification)

    def __add__(self, other: Any) -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            return PuiseuxSeries(self.rep + other, self.prec, self.ramification)
        prec = min(self.prec, other.prec)
        return PuiseuxSeries(rs_trunc(self.rep + other.rep, self.t, prec), prec, self.ramification)

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(-self.rep, self.prec, self.ramification)

    def __sub__(self, other: Any) -> "PuiseuxSeries":
        return self + (-other)

    def __rsub__(self, other: Any) -> "PuiseuxSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            return PuiseuxSeries(self.rep * other, self.prec, self.ramification)
        prec = min(self.prec + other.valuation, other.prec + self.valuation)
        return PuiseuxSeries(rs_mul(self.rep, other.rep, self.t, prec), prec, self.ramification)

    __rmul__ = __mul__

    def scale(self, c) -> "PuiseuxSeries":
        return PuiseuxSeries(self.rep.mul_ground(c), self.prec, self.ramification)

    def __pow__(self, n: int) -> "PuiseuxSeries":
        result = PuiseuxSeries(self.rep.ring.one, self.prec + n * self.valuation, self.ramification)
        base = self
        for _ in range(n):
            result = result * base
        return result

    def shift(self, k: int) -> "PuiseuxSeries":
        """Multiply by t^k (k may be negative when the division is exact)."""
        if k >= 0:
            return PuiseuxSeries(self.rep * self.t ** k, self.prec + k, self.ramification)
        R = self.rep.ring
        terms = {}
        for (n,), c in self.rep.iterterms():
            if n + k < 0:
                raise ValueError(f"series is not divisible by t^{-k}")
            terms[(n + k,)] = c
        return PuiseuxSeries(R.from_dict(terms), self.prec + k, self.ramification)

    def derivative(self) -> "PuiseuxSeries":
        return PuiseuxSeries(self.rep.diff(self.t), max(self.prec - 1, 0), self.ramification)

    def inverse(self) -> "PuiseuxSeries":
        """Multiplicative inverse of a series with nonzero constant term."""
        K = self.field
        c0 = self.coeff(0)
        if not c0:
            raise ZeroDivisionError("series inverse needs a nonzero constant term")
        R = self.rep.ring
        t = self.t
        inv = R.ground_new(K.quo(K.one, c0))
        for step in _newton_steps(self.prec):
            err = R.one - rs_mul(inv, self.rep, t, step)
            inv = inv + rs_mul(inv, err, t, step)
        return PuiseuxSeries(rs_trunc(inv, t, self.prec), self.prec, self.ramification)

    def inverse_root(self, e: int) -> "PuiseuxSeries":
        """(self)^(-1/e) for a series with constant term 1."""
        K = self.field
        if self.coeff(0) != K.one:
            raise ValueError("inverse_root needs constant term 1")
        R = self.rep.ring
        t = self.t
        inv_e = K.quo(K.one, K.convert(e))
        v = R.one
        for step in _newton_steps(self.prec):
            power = R.one
            for _ in range(e):
                power = rs_mul(power, v, t, step)
            err = R.one - rs_mul(self.rep, power, t, step)
            v = v + rs_mul(v, err, t, step).mul_ground(inv_e)
        return PuiseuxSeries(rs_trunc(v, t, self.prec), self.prec, self.ramification)

    def __truediv__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        """Exact quotient; the divisor may have positive order."""
        m = other.valuation
        if m >= other.prec:
            raise TruncationInsufficient(other.prec, "division by a series of unknown order")
        unit = other.shift(-m)
        quotient = self.shift(-m) if self.valuation >= m else None
        if quotient is None:
            raise ValueError("quotient is not a power series")
        return quotient * unit.inverse()

    # ------------------------------------------------------------------
    # Display
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        K = self.field
        return {
            "ramification": self.ramification,
            "precision": self.prec,
            "terms": [[n, str(K.to_sympy(c))] for n, c in self.coefficients()],
        }

    def __str__(self) -> str:
        K = self.field
        e = self.ramification
        parts = []
        for n, c in self.coefficients():
            exp = f"{n}/{e}" if e != 1 else str(n)
            parts.append(f"({K.to_sympy(c)})*t^{exp}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.prec if e == 1 else f'{self.prec}/{e}'})"


def checked_order(
    s: PuiseuxSeries,
    limit: Optional[float] = None,
    slack: Optional[int] = None,
    context: str = "",
) -> int:
    """
    Order of s, accepted only when strictly below its precision minus slack.

    Args:
        s: Series whose order is wanted
        limit: Extra bound on the trustworthy exponents
        slack: Safety margin (defaults to settings.TRUNC_SLACK)
        context: Label for the error message

    Returns:
        The certified order

    Raises:
        TruncationInsufficient: If the order cannot be certified
    """
    slack = settings.TRUNC_SLACK if slack is None else slack
    bound = s.prec if limit is None else min(s.prec, limit)
    v = s.valuation
    if s.is_known_zero() or v >= bound - slack:
        raise TruncationInsufficient(int(bound) if bound != math.inf else s.prec, context)
    return v


def compose_poly(p: PolyElement, xs: PuiseuxSeries, ys: PuiseuxSeries) -> PuiseuxSeries:
    """
    p(x(t), y(t)) with the precision the inputs allow.

    Args:
        p: Bivariate polynomial over the series field
        xs: Series substituted for x
        ys: Series substituted for y

    Returns:
        The composed series
    """
    R = xs.rep.ring
    K = R.domain
    t = R.gens[0]
    if not p:
        return PuiseuxSeries(R.zero, min(xs.prec, ys.prec) + 10 ** 6)

    ox, oy = xs.valuation, ys.valuation
    prec = None
    for (i, j) in p.itermonoms():
        candidates = []
        if i:
            candidates.append(xs.prec + (i - 1) * ox + j * oy)
        if j:
            candidates.append(ys.prec + (j - 1) * oy + i * ox)
        if candidates:
            bound = min(candidates)
            prec = bound if prec is None else min(prec, bound)
    if prec is None:
        # constant polynomial
        prec = max(xs.prec, ys.prec)

    by_y: Dict[int, Dict[int, Any]] = {}
    for (i, j), c in p.iterterms():
        by_y.setdefault(j, {})[i] = c
    max_i = max(i for (i, _) in p.itermonoms())
    max_j = max(by_y)

    xpow = [R.one]
    for _ in range(max_i):
        xpow.append(rs_mul(xpow[-1], xs.rep, t, prec))
    result = R.zero
    ypow = R.one
    for j in range(max_j + 1):
        if j:
            ypow = rs_mul(ypow, ys.rep, t, prec)
        row = by_y.get(j)
        if not row:
            continue
        inner = R.zero
        for i, c in row.items():
            inner += xpow[i].mul_ground(c)
        result += rs_mul(inner, ypow, t, prec)
    return PuiseuxSeries(rs_trunc(result, t, prec), prec)


def eval_truncated(p: PolyElement, xs: PolyElement, ys: PolyElement, prec: int) -> PolyElement:
    """p(x(t), y(t)) mod t^prec on raw representatives."""
    return compose_poly(p, PuiseuxSeries(xs, prec), PuiseuxSeries(ys, prec)).truncate(prec).rep
