"""Representations as sums of three squares and Hurwitz class numbers.

Two independent routes to r(N):

* ``r3_bruteforce`` counts lattice points directly (compiled kernel);
* ``r3_gauss`` uses Gauss's case formula in terms of H(N), which in turn
  comes from class numbers of fundamental discriminants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from ._config import budgets
from .arith import divisors, kronecker_symbol, mobius, sigma1, squarefree_decompose
from .errors import BudgetExceeded
from .formclass import class_number, fundamental_discriminant
from .report import Report, Status, Verdict


@dataclass(frozen=True, order=True)
class Twelfths:
    """An exact rational numerator12 / 12."""

    numerator12: int

    def __add__(self, other: "Twelfths") -> "Twelfths":
        return Twelfths(self.numerator12 + other.numerator12)

    def __mul__(self, k: int) -> "Twelfths":
        return Twelfths(self.numerator12 * k)

    __rmul__ = __mul__

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator12, 12)

    def times(self, k: int) -> int:
        """k * value, which must be an integer."""
        q, r = divmod(k * self.numerator12, 12)
        if r:
            raise ArithmeticError(f"{k} * {self} is not an integer")
        return q

    def __str__(self) -> str:
        return str(self.as_fraction())


def _unit_weight(D: int) -> int:
    return {-3: 6, -4: 4}.get(D, 2)


def conductor_split(N: int) -> tuple[int, int]:
    """Write -N = f^2 * D with D a fundamental discriminant; returns (f, D)."""
    c0, d = squarefree_decompose(-N)
    D = fundamental_discriminant(d)
    if D == d:
        return c0, D
    if c0 % 2:
        raise ValueError(f"-{N} is not a discriminant")
    return c0 // 2, D


@lru_cache(maxsize=None)
def hurwitz(N: int) -> Twelfths:
    if N < 1:
        raise ValueError("N must be positive")
    if N % 4 in (1, 2):
        return Twelfths(0)
    f, D = conductor_split(N)
    total = sum(mobius(i) * kronecker_symbol(D, i) * sigma1(f // i) for i in divisors(f))
    # H = (2 h / w) * total and 12 * 2 / w is an integer for w in {2, 4, 6}
    return Twelfths(24 // _unit_weight(D) * class_number(D) * total)


def hurwitz_by_forms(N: int) -> Twelfths:
    """H(N) by counting all reduced forms of discriminant -N, primitive or not.

    Classes of a(x^2 + y^2) count 1/2 and classes of a(x^2 + xy + y^2) count 1/3.
    Independent of ``hurwitz``: no Moebius sum and no class number lookup.
    """
    if N % 4 in (1, 2):
        return Twelfths(0)
    D = -N
    amax = math.isqrt(N // 3)
    total = 0
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and c == a):
                continue
            if a == c and b == 0:
                total += 6
            elif a == b == c:
                total += 4
            else:
                total += 12
    return Twelfths(total)


def r3_bruteforce(N: int) -> int:
    if N < 1:
        raise ValueError("N must be positive")
    limit = min(budgets().r3, kernels.R3_LIMIT)
    if N > limit:
        raise BudgetExceeded(f"N = {N} exceeds the brute-force budget {limit}")
    return kernels.r3_count(N)


def r3_gauss(N: int) -> int:
    if N < 1:
        raise ValueError("N must be positive")
    while N % 4 == 0:
        N //= 4
    if N % 8 == 7:
        return 0
    if N % 8 == 3:
        return hurwitz(N).times(24)
    return hurwitz(4 * N).times(12)


def divisibility_report(N: int, n: int) -> Report:
    if N < 1 or n <= 1 or n % 2 == 0:
        raise ValueError("need N >= 1 and odd n > 1")
    report = Report(subject=f"divisibility of r({N}) by {n}")
    r = r3_gauss(N)
    report.data.update(N=N, n=n, r_gauss=r)
    try:
        brute = r3_bruteforce(N)
    except BudgetExceeded as exc:
        report.verdicts.append(Verdict("routes agree", Status.SKIPPED, str(exc)))
    else:
        report.data["r_brute"] = brute
        report.verdicts.append(Verdict.check("routes agree", brute == r, f"gauss {r}, brute {brute}"))
    g = math.gcd(N, r)
    report.data["gcd_N_r"] = g
    report.verdicts.append(Verdict.check(f"{n} | gcd(N, r(N))", g % n == 0, f"gcd = {g}"))
    if N % 8 == 3:
        report.verdicts.append(Verdict.check(f"{24 * n} | r(N)", r % (24 * n) == 0))
    elif N % 4 in (1, 2):
        report.verdicts.append(Verdict.check(f"{12 * n} | r(N)", r % (12 * n) == 0))
    return report
