"""Build (a, b) so that (a, b, n) is a valid certificate with n | d.

Pipeline: ``choose_a`` -> ``build_prime_set`` -> ``choose_b`` ->
``klcert.evaluate_triple``. Every step is a congruence condition, so each
stage reduces to a CRT solve plus an index into the resulting progression.

Case conditions on a (besides a = 2 mod n and a != 2 mod p^2 for p | n):
  5mod8: a odd;   2mod4: a = 2 mod 4;   3mod4: a = 0 mod 4.
and on b (besides the per-prime residues):
  5mod8: b odd;   2mod4: b = 3 mod 4;   3mod4: b = 1 mod 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._config import budgets
from .arith import crt_combine, factor, iroot, is_prime, is_squarefree, nth_root_mod_p
from .klcert import BadN, CaseTag, KLCertificate, evaluate_triple


class ScanExhausted(RuntimeError):
    pass


_A_PARITY = {
    CaseTag.FIVE_MOD_8: (1, 2),
    CaseTag.TWO_MOD_4: (2, 4),
    CaseTag.THREE_MOD_4: (0, 4),
}
_B_PARITY = {
    CaseTag.FIVE_MOD_8: (1, 2),
    CaseTag.TWO_MOD_4: (3, 4),
    CaseTag.THREE_MOD_4: (1, 4),
}


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    case_tag: CaseTag
    extra_primes: int = 0
    a_index: int = 0
    b_index: int = 0

    def __post_init__(self):
        if self.n <= 1 or self.n % 2 == 0 or not is_squarefree(self.n):
            raise BadN(f"n must be a squarefree odd integer > 1, got {self.n}")
        if self.case_tag not in _A_PARITY:
            raise ValueError(f"case must be one of 5mod8, 2mod4, 3mod4, got {self.case_tag}")
        if min(self.extra_primes, self.a_index, self.b_index) < 0:
            raise ValueError("extra_primes, a_index and b_index must be non-negative")

    @property
    def base_primes(self) -> list[int]:
        return factor(self.n).primes


@dataclass(frozen=True)
class PrimeEntry:
    l: int
    root: int
    is_base: bool


@dataclass(frozen=True)
class PrimeSet:
    entries: tuple[PrimeEntry, ...]

    @property
    def primes(self) -> list[int]:
        return [e.l for e in self.entries]


def _a_candidates(params: GeneratorParams):
    residue, modulus = crt_combine([(2, params.n), _A_PARITY[params.case_tag]])
    squares = [p * p for p in params.base_primes]
    for k in itertools.count():
        a = residue + k * modulus
        if a > 0 and all(a % q != 2 for q in squares):
            yield a


def choose_a(params: GeneratorParams) -> int:
    """The a_index-th positive integer (in increasing order) meeting the case's a-conditions."""
    return next(itertools.islice(_a_candidates(params), params.a_index, None))


def is_admissible_prime(l: int, a: int, n: int) -> int | None:
    """A root x0 of 4 x^n = a^2 (mod l), or None when l | a or no root exists.

    For l | n (a base prime, with a = 2 mod l) the smallest root is 1.
    """
    if l % 2 == 0:
        raise ValueError(f"l must be an odd prime, got {l}")
    if a % l == 0:
        return None
    t = a * a * pow(4, -1, l) % l
    return nth_root_mod_p(n, t, l)


def build_prime_set(a: int, params: GeneratorParams) -> PrimeSet:
    entries = []
    for p in params.base_primes:
        if (4 - a * a) % p:
            raise ValueError(f"a = {a} does not satisfy a = 2 mod {p}")
        entries.append(PrimeEntry(p, 1, True))
    bound = budgets().scan
    found = 0
    l = 3
    while found < params.extra_primes:
        if l > bound:
            raise ScanExhausted(f"no admissible prime below {bound} for a = {a}")
        if params.n % l and a % l and is_prime(l):
            root = is_admissible_prime(l, a, params.n)
            if root is not None:
                entries.append(PrimeEntry(l, root, False))
                found += 1
        l += 2
    entries.sort(key=lambda e: e.l)
    return PrimeSet(tuple(entries))


def _hensel_avoiding_residue(entry: PrimeEntry, a: int, n: int) -> int:
    """A residue b mod l^2 with 4 b^n = a^2 mod l but not mod l^2."""
    l, x0 = entry.l, entry.root
    l2 = l * l
    f0 = (4 * pow(x0, n, l2) - a * a) % l2
    deriv = 4 * n * pow(x0, n - 1, l) % l
    # f(x0 + t l) = f(x0) + t l f'(x0) mod l^2, zero exactly at t = t*
    t_star = -(f0 // l) * pow(deriv, -1, l) % l
    s = (t_star + 1) % l
    return x0 + s * l


def b_congruences(a: int, T: PrimeSet, params: GeneratorParams) -> list[tuple[int, int]]:
    system = []
    for entry in T.entries:
        if entry.is_base:
            system.append((1, entry.l))
        else:
            system.append((_hensel_avoiding_residue(entry, a, params.n), entry.l**2))
    in_T = set(T.primes)
    for q in factor(a).primes:
        if q != 2 and q not in in_T:
            system.append((1, q))
    system.append(_B_PARITY[params.case_tag])
    return system


def _least_positive_b(a: int, n: int) -> int:
    """Smallest b >= 2 with 4 b^n > a^2."""
    b = iroot(a * a // 4, n)
    while 4 * b**n <= a * a:
        b += 1
    return max(b, 2)


def choose_b(a: int, T: PrimeSet, params: GeneratorParams) -> int:
    residue, modulus = crt_combine(b_congruences(a, T, params))
    lower = _least_positive_b(a, params.n)
    first = residue + (lower - residue + modulus - 1) // modulus * modulus
    return first + params.b_index * modulus


def generate(params: GeneratorParams) -> KLCertificate:
    a = choose_a(params)
    T = build_prime_set(a, params)
    b = choose_b(a, T, params)
    return evaluate_triple(a, b, params.n)


def search_small(n: int, case_tag: CaseTag, a_max: int, b_max: int) -> list[KLCertificate]:
    """Every valid certificate with 2 <= a <= a_max, 2 <= b <= b_max, n | d, d in the case."""
    if a_max < 2 or b_max < 2:
        raise ValueError("bounds must be >= 2")
    found = []
    for a in range(2, a_max + 1):
        for b in range(2, b_max + 1):
            if a * a >= 4 * b**n:
                continue
            cert = evaluate_triple(a, b, n)
            if cert.valid and cert.d % n == 0 and cert.field.case_tag is case_tag:
                found.append(cert)
    found.sort(key=lambda c: (abs(c.d), c.a, c.b))
    return found
