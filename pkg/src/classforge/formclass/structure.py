"""Structure of a finite abelian group known element by element.

The group is handed over as a list of hashable elements with their orders,
a multiplication callable and the identity. Invariants come from counting
p-power torsion; a basis is then built greedily, one cyclic factor at a time,
by picking an element of the right order whose cyclic subgroup meets the span
of the previous picks trivially. A cyclic subgroup of maximal order in an
abelian p-group is a direct summand, which is what makes the greedy step safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from ..arith import factor


@dataclass
class ClassGroupStructure:
    D: int
    h: int
    elementary_divisors: list[int]
    generators: list = field(default_factory=list)
    narrow: bool = False

    def p_rank(self, p: int) -> int:
        return sum(1 for d in self.elementary_divisors if d % p == 0)

    def has_element_of_order(self, n: int) -> bool:
        return self.elementary_divisors[-1] % n == 0

    def to_dict(self) -> dict:
        return {
            "D": str(self.D),
            "h": str(self.h),
            "elementary_divisors": [str(d) for d in self.elementary_divisors],
            "generators": [g.to_dict() for g in self.generators],
            "narrow": self.narrow,
        }


def _pow(x, e: int, mul, identity):
    result = identity
    while e:
        if e & 1:
            result = mul(result, x)
        e >>= 1
        if e:
            x = mul(x, x)
    return result


def sylow_exponents(orders: Sequence[int], p: int, e: int) -> list[int]:
    """Exponents of the cyclic factors of the Sylow p-subgroup, largest first."""
    counts = [sum(1 for o in orders if p**k % o == 0) for k in range(e + 1)]
    ranks = []
    for k in range(1, e + 1):
        ratio, rem = divmod(counts[k], counts[k - 1])
        if rem:
            raise ArithmeticError("torsion counts are not a group")
        r = 0
        while ratio > 1:
            ratio, rem = divmod(ratio, p)
            if rem:
                raise ArithmeticError("torsion count ratio is not a power of p")
            r += 1
        ranks.append(r)
    width = ranks[0] if ranks else 0
    return [sum(1 for r in ranks if r >= j) for j in range(1, width + 1)]


def abelian_structure(
    elements: Sequence[Hashable],
    orders: Sequence[int],
    mul: Callable,
    identity: Hashable,
) -> tuple[list[int], list]:
    """Return ``(invariant_factors, generators)`` with d1 | d2 | ... and ord(g_i) = d_i."""
    h = len(elements)
    if h == 1:
        return [1], [identity]
    by_order: dict[int, list] = {}
    for x, o in zip(elements, orders):
        by_order.setdefault(o, []).append(x)

    sylow: dict[int, list[tuple[int, Hashable]]] = {}
    for p, e in factor(h).factors:
        exps = sylow_exponents(orders, p, e)
        span = {identity}
        basis = []
        for ex in exps:
            q = p**ex
            for x in by_order.get(q, ()):
                if _pow(x, q // p, mul, identity) not in span:
                    break
            else:
                raise ArithmeticError(f"no basis element of order {q}")
            powers = [identity]
            for _ in range(q - 1):
                powers.append(mul(powers[-1], x))
            span = {mul(s, y) for s in span for y in powers}
            basis.append((q, x))
        sylow[p] = basis

    width = max(len(b) for b in sylow.values())
    divisors, gens = [], []
    # slot j counts from the largest factor down
    for j in range(width):
        d, g = 1, identity
        for basis in sylow.values():
            if j < len(basis):
                q, x = basis[j]
                d *= q
                g = mul(g, x)
        divisors.append(d)
        gens.append(g)
    return divisors[::-1], gens[::-1]
