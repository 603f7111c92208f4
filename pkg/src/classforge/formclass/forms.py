"""Binary quadratic forms: the value type, Gauss reduction and composition."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..arith import xgcd


class NotImaginary(ValueError):
    pass


class MismatchedDiscriminant(ValueError):
    pass


class BadDiscriminant(ValueError):
    pass


class SquareDiscriminant(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BQF:
    """The form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def D(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    def inverse(self) -> "BQF":
        return BQF(self.a, -self.b, self.c)

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"

    def to_dict(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}


def check_discriminant(D: int) -> None:
    if D % 4 not in (0, 1):
        raise BadDiscriminant(f"{D} is not 0 or 1 mod 4")


def principal_form(D: int) -> BQF:
    check_discriminant(D)
    b = D & 1
    return BQF(1, b, (b - D) // 4)


def is_reduced(f: BQF) -> bool:
    a, b, c = f.a, f.b, f.c
    return abs(b) <= a <= c and not (b < 0 and (a == -b or a == c))


def reduce(f: BQF) -> BQF:
    """Reduced representative of a positive definite form."""
    a, b, c = f.a, f.b, f.c
    if b * b - 4 * a * c >= 0:
        raise NotImaginary(f"{f} has non-negative discriminant")
    if a <= 0:
        raise NotImaginary(f"{f} is not positive definite")
    while True:
        if not -a < b <= a:
            k = (a - b) // (2 * a)
            c = a * k * k + b * k + c
            b = b + 2 * a * k
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return BQF(a, b, c)


def compose_raw(f: BQF, g: BQF) -> BQF:
    """Composite of two primitive forms with positive leading coefficients, unreduced."""
    D = f.D
    if g.D != D:
        raise MismatchedDiscriminant(f"{f} has discriminant {D}, {g} has {g.D}")
    if f.a <= 0 or g.a <= 0:
        raise ValueError("compose_raw needs positive leading coefficients")
    if f.a > g.a:
        f, g = g, f
    a1, b1 = f.a, f.b
    a2, b2, c2 = g.a, g.b, g.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, y1, _ = xgcd(a2, a1)
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, y2 = xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - D) // (4 * a3)
    return BQF(a3, b3, c3)


def compose(f: BQF, g: BQF) -> BQF:
    """Reduced representative of the product class (positive definite case)."""
    if f.D >= 0:
        raise NotImaginary(f"{f} has non-negative discriminant")
    return reduce(compose_raw(f, g))


def power(f: BQF, e: int) -> BQF:
    if e < 0:
        f, e = f.inverse(), -e
    result = principal_form(f.D)
    base = reduce(f)
    while e:
        if e & 1:
            result = compose(result, base)
        e >>= 1
        if e:
            base = compose(base, base)
    return result
