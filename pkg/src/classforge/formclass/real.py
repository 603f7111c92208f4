"""Narrow class groups of positive non-square discriminants.

A form (a, b, c) with D > 0 is reduced when 0 < b < sqrt(D) and
sqrt(D) - b < 2|a| < sqrt(D) + b. The reduction operator rho permutes the
reduced forms; its orbits (cycles) are exactly the proper equivalence
classes, so the number of cycles is the narrow class number.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .._config import budgets
from ..arith import divisors
from ..errors import BudgetExceeded
from .forms import BQF, BadDiscriminant, SquareDiscriminant, check_discriminant, compose_raw
from .structure import ClassGroupStructure, abelian_structure


def _check_positive(D: int) -> int:
    if D <= 0:
        raise BadDiscriminant(f"expected a positive discriminant, got {D}")
    check_discriminant(D)
    s = math.isqrt(D)
    if s * s == D:
        raise SquareDiscriminant(f"{D} is a perfect square")
    return s


def is_reduced_indefinite(f: BQF, s: int | None = None) -> bool:
    D = f.D
    if s is None:
        s = math.isqrt(D)
    a2 = 2 * abs(f.a)
    # sqrt(D) is irrational, so x < sqrt(D) <=> x <= s and x > sqrt(D) <=> x > s
    return 0 < f.b <= s and a2 + f.b > s and a2 - f.b <= s


def rho(f: BQF, s: int | None = None) -> BQF:
    """One reduction step (a, b, c) -> (c, b', (b'^2 - D) / 4c), a proper equivalence."""
    D = f.D
    if s is None:
        s = math.isqrt(D)
    c = f.c
    m = 2 * abs(c)
    if abs(c) <= s:
        b = s - (s + f.b) % m
    else:
        b = (-f.b) % m
        if b > abs(c):
            b -= m
    return BQF(c, b, (b * b - D) // (4 * c))


def reduce_indefinite(f: BQF) -> BQF:
    s = math.isqrt(f.D)
    while not is_reduced_indefinite(f, s):
        f = rho(f, s)
    return f


def reduced_indefinite_forms(D: int) -> list[BQF]:
    """Every primitive reduced form of discriminant D, sorted."""
    s = _check_positive(D)
    out = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        m = (D - b * b) // 4  # = -a*c > 0
        for a in divisors(m):
            if not (2 * a + b > s and 2 * a - b <= s):
                continue
            c = -m // a
            for f in (BQF(a, b, c), BQF(-a, b, -c)):
                if f.is_primitive:
                    out.append(f)
    out.sort()
    return out


class NarrowClassGroup:
    """Cycles of reduced forms with the composition law transported onto cycle indices."""

    def __init__(self, D: int):
        s = _check_positive(D)
        self.D = D
        self._s = s
        forms = reduced_indefinite_forms(D)
        self.cycle_of: dict[BQF, int] = {}
        self.cycles: list[list[BQF]] = []
        for f in forms:
            if f in self.cycle_of:
                continue
            idx = len(self.cycles)
            cycle = []
            g = f
            while g not in self.cycle_of:
                self.cycle_of[g] = idx
                cycle.append(g)
                g = rho(g, s)
            if g != f:
                raise ArithmeticError(f"rho orbit of {f} is not a cycle")
            self.cycles.append(cycle)
            limit = budgets().classes
            if len(self.cycles) > limit:
                raise BudgetExceeded(f"more than {limit} narrow classes")
        b = D & 1
        self.identity = self.class_of(BQF(1, b, (b - D) // 4))

    @property
    def h(self) -> int:
        return len(self.cycles)

    def representative(self, idx: int) -> BQF:
        return min(self.cycles[idx])

    def class_of(self, f: BQF) -> int:
        return self.cycle_of[reduce_indefinite(f)]

    def _positive(self, f: BQF) -> BQF:
        # reduced forms have a*c < 0, so one rho step makes the first coefficient positive
        while f.a <= 0:
            f = rho(f, self._s)
        return f

    def mul(self, i: int, j: int) -> int:
        f = self._positive(self.representative(i))
        g = self._positive(self.representative(j))
        return self.class_of(compose_raw(f, g))

    def inverse(self, i: int) -> int:
        f = self.representative(i)
        return self.class_of(BQF(f.c, f.b, f.a))

    def power(self, i: int, e: int) -> int:
        result, base = self.identity, i
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k


@lru_cache(maxsize=256)
def narrow_group(D: int) -> NarrowClassGroup:
    return NarrowClassGroup(D)


def narrow_class_group(D: int) -> ClassGroupStructure:
    G = narrow_group(D)
    elements = list(range(G.h))
    orders = [G.order(i) for i in elements]
    divs, gens = abelian_structure(elements, orders, G.mul, G.identity)
    return ClassGroupStructure(
        D=D,
        h=G.h,
        elementary_divisors=divs,
        generators=[G.representative(g) for g in gens],
        narrow=True,
    )
