"""Exact integer number theory used throughout the package.

Everything here works on Python ``int`` so there is no overflow at any size.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from ._config import budgets
from .errors import BudgetExceeded

TRIAL_BOUND = 10**6

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10**24 (covers 2**64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_RANDOM_ROUNDS = 64


class Incompatible(ValueError):
    """Two congruences in a system disagree modulo the gcd of their moduli."""


class ZeroInput(ValueError):
    pass


class BadModulus(ValueError):
    pass


class Congruence(NamedTuple):
    residue: int
    modulus: int


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        body = " * ".join(parts) if parts else "1"
        return f"-{body}" if self.sign < 0 else body


# ---------------------------------------------------------------------------
# small helpers


def iroot(x: int, n: int) -> int:
    """Floor of the real n-th root of ``x >= 0``."""
    if x < 0:
        raise ValueError("iroot needs x >= 0")
    if n < 1:
        raise ValueError("iroot needs n >= 1")
    if x < 2 or n == 1:
        return x
    if n == 2:
        return math.isqrt(x)
    # Newton from an overestimate
    r = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def crt_combine(system: Iterable[tuple[int, int]]) -> Congruence:
    """Solve a system of congruences with arbitrary (not necessarily coprime) moduli.

    Returns the least non-negative solution together with the lcm of the moduli.
    """
    r, m = 0, 1
    for residue, modulus in system:
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        g, u, _ = xgcd(m, modulus)
        diff = residue - r
        if diff % g:
            raise Incompatible(
                f"x = {r} mod {m} conflicts with x = {residue} mod {modulus}"
            )
        step = modulus // g
        k = (diff // g) * u % step
        r = r + m * k
        m = m * step
        r %= m
    return Congruence(r, m)


# ---------------------------------------------------------------------------
# symbols


def kronecker_symbol(a: int, m: int) -> int:
    if m == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and m % 2 == 0:
        return 0
    sign = 1
    if m < 0:
        m = -m
        if a < 0:
            sign = -1
    v = (m & -m).bit_length() - 1
    m >>= v
    if v & 1 and a % 8 in (3, 5):
        sign = -sign
    # m is now odd and positive: Jacobi symbol with sign bookkeeping
    a %= m
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a %= m
    return sign if m == 1 else 0


# ---------------------------------------------------------------------------
# primality and factoring


@lru_cache(maxsize=None)
def small_primes(bound: int = TRIAL_BOUND) -> tuple[int, ...]:
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, 64 seeded random rounds above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        bases: Iterable[int] = _MR_BASES
    else:
        rng = random.Random(n)
        bases = (rng.randrange(2, n - 1) for _ in range(_MR_RANDOM_ROUNDS))
    return all(_strong_probable_prime(n, b, d, s) for b in bases)


def _brent(n: int, c: int, limit: int) -> tuple[int, int]:
    """One Pollard-Brent run with x^2 + c; returns (divisor or n or 1, steps used)."""
    y, r, q, g = 2, 1, 1, 1
    batch = 128
    x = ys = y
    steps = 0
    while g == 1:
        if steps > limit:
            return 1, steps
        steps += r
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += batch
        r *= 2
    if g == n:
        # batch overshot; step back one at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g, steps


def _split(n: int, budget: int) -> int:
    """Nontrivial divisor of an odd composite n."""
    r = math.isqrt(n)
    if r * r == n:
        return r
    c, used = 1, 0
    while used <= budget:
        g, steps = _brent(n, c, budget - used)
        used += steps
        if 1 < g < n:
            return g
        c += 1
    raise BudgetExceeded(f"Pollard rho found no factor of {n} within {budget} steps")


def _factor_cofactor(n: int, out: dict[int, int]) -> None:
    budget = budgets().rho
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        g = _split(m, budget)
        stack.extend((g, m // g))


def factor(m: int) -> Factorization:
    """Trial division below 10**6, then Pollard-Brent on what is left."""
    if m == 0:
        raise ZeroInput("cannot factor 0")
    sign = -1 if m < 0 else 1
    n = abs(m)
    found: dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _factor_cofactor(n, found)
    return Factorization(sign, tuple(sorted(found.items())))


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Write ``m = c**2 * d`` with ``c > 0`` and ``d`` squarefree of the sign of m."""
    f = factor(m)
    c, d = 1, f.sign
    for p, e in f.factors:
        c *= p ** (e // 2)
        if e % 2:
            d *= p
    return c, d


def is_squarefree(m: int) -> bool:
    return all(e == 1 for _, e in factor(m).factors)


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius needs m >= 1")
    f = factor(m)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def sigma1(m: int) -> int:
    if m < 1:
        raise ValueError("sigma1 needs m >= 1")
    total = 1
    for p, e in factor(m).factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factor(m).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# roots modulo a prime

_EXHAUSTIVE_LIMIT = 10**6


def nth_root_mod_p(n: int, t: int, l: int) -> int | None:
    """Some X with X**n = t (mod l), or None when t is not an n-th power residue.

    Solvability is decided by Euler's criterion t**((l-1)/g) = 1 with
    g = gcd(n, l-1). Below 10**6 the root itself is found by exhaustive search,
    so the smallest root in [1, l-1] is returned.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if l < 3 or l % 2 == 0 or not is_prime(l):
        raise BadModulus(f"{l} is not an odd prime")
    t %= l
    if t == 0:
        raise ValueError("t must be coprime to l")
    g = math.gcd(n, l - 1)
    if pow(t, (l - 1) // g, l) != 1:
        return None
    if g == 1:
        # x -> x**n is a bijection; invert the exponent
        x = pow(t, pow(n, -1, l - 1), l)
        if l >= _EXHAUSTIVE_LIMIT:
            return x
    for x in range(1, l):
        if pow(x, n, l) == t:
            return x
    raise AssertionError("solvability criterion and search disagree")  # pragma: no cover
