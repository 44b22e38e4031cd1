# folpol/linsneto/eisenstein.py
"""
Eisenstein Integers - Exact arithmetic in Z[j], j a primitive cube root of unity
"""

from dataclasses import dataclass
from typing import Tuple, Union

IntLike = Union[int, "EisensteinInt"]


@dataclass(frozen=True)
class EisensteinInt:
    """
    a + b j with j^2 = -1 - j.

    Z[j] is a Euclidean domain for the norm N(a + b j) = a^2 + b^2 - a b.
    """

    a: int = 0
    b: int = 0

    @classmethod
    def of(cls, value: IntLike) -> "EisensteinInt":
        if isinstance(value, EisensteinInt):
            return value
        return cls(int(value), 0)

    @classmethod
    def j(cls) -> "EisensteinInt":
        return cls(0, 1)

    def __add__(self, other: IntLike) -> "EisensteinInt":
        other = EisensteinInt.of(other)
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other: IntLike) -> "EisensteinInt":
        return self + (-EisensteinInt.of(other))

    def __rsub__(self, other: IntLike) -> "EisensteinInt":
        return EisensteinInt.of(other) - self

    def __mul__(self, other: IntLike) -> "EisensteinInt":
        other = EisensteinInt.of(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + bj)(c + dj) = ac + (ad + bc) j + bd j^2
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "EisensteinInt":
        if exponent < 0:
            raise ValueError("negative powers leave Z[j]")
        result = EisensteinInt(1, 0)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "EisensteinInt":
        """Complex conjugate: j maps to j^2 = -1 - j."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b - self.a * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __divmod__(self, other: IntLike) -> Tuple["EisensteinInt", "EisensteinInt"]:
        other = EisensteinInt.of(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[j]")
        num = self * other.conjugate()
        # Nearest lattice point; the remainder has norm at most 3/4 N(other)
        q = EisensteinInt((2 * num.a + n) // (2 * n), (2 * num.b + n) // (2 * n))
        return q, self - q * other

    def __floordiv__(self, other: IntLike) -> "EisensteinInt":
        return divmod(self, other)[0]

    def __mod__(self, other: IntLike) -> "EisensteinInt":
        return divmod(self, other)[1]

    def divides(self, other: IntLike) -> bool:
        if self.is_zero():
            return EisensteinInt.of(other).is_zero()
        return (EisensteinInt.of(other) % self).is_zero()

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        j_part = {1: "j", -1: "-j"}.get(self.b, f"{self.b}j")
        if self.a == 0:
            return j_part
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {j_part.lstrip('-')}"


UNITS = (
    EisensteinInt(1, 0),
    EisensteinInt(-1, 0),
    EisensteinInt(0, 1),
    EisensteinInt(0, -1),
    EisensteinInt(-1, -1),
    EisensteinInt(1, 1),
)


def gcd(x: IntLike, y: IntLike) -> EisensteinInt:
    """Euclidean gcd, defined up to a unit."""
    x, y = EisensteinInt.of(x), EisensteinInt.of(y)
    while not y.is_zero():
        x, y = y, x % y
    return x


def reduce_ratio(num: IntLike, den: IntLike) -> Tuple[EisensteinInt, EisensteinInt]:
    """
    num / den with the common factor removed.

    A zero denominator is kept as (1, 0); the point at infinity.
    """
    num, den = EisensteinInt.of(num), EisensteinInt.of(den)
    if den.is_zero():
        if num.is_zero():
            raise ZeroDivisionError("0/0 in Q(j)")
        return EisensteinInt(1, 0), EisensteinInt(0, 0)
    g = gcd(num, den)
    return num // g, den // g
