"""Class groups of quadratic discriminants via binary quadratic forms."""

from .forms import (
    BQF,
    BadDiscriminant,
    MismatchedDiscriminant,
    NotImaginary,
    SquareDiscriminant,
    compose,
    power,
    principal_form,
    reduce,
)
from .imaginary import (
    class_number,
    element_orders,
    enumerate_class_group,
    group_structure,
    torsion_count,
)
from .real import NarrowClassGroup, narrow_class_group, narrow_group, reduce_indefinite, rho
from .scholz import ScholzVerdict, fundamental_discriminant, scholz_check
from .structure import ClassGroupStructure


def p_rank(D: int, p: int) -> int:
    """log_p of the number of classes killed by p (narrow group when D > 0)."""
    if D < 0:
        count = torsion_count(D, p)
    else:
        G = narrow_group(D)
        count = sum(1 for i in range(G.h) if G.power(i, p) == G.identity)
    rank = 0
    while count > 1:
        count, rem = divmod(count, p)
        if rem:
            raise ArithmeticError(f"{p}-torsion count is not a power of {p}")
        rank += 1
    return rank


__all__ = [
    "BQF",
    "BadDiscriminant",
    "ClassGroupStructure",
    "MismatchedDiscriminant",
    "NarrowClassGroup",
    "NotImaginary",
    "ScholzVerdict",
    "SquareDiscriminant",
    "class_number",
    "compose",
    "element_orders",
    "enumerate_class_group",
    "fundamental_discriminant",
    "group_structure",
    "narrow_class_group",
    "narrow_group",
    "p_rank",
    "power",
    "principal_form",
    "reduce",
    "reduce_indefinite",
    "rho",
    "scholz_check",
    "torsion_count",
]
