"""Class groups of negative discriminants via reduced positive definite forms."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .. import kernels
from .._config import budgets
from ..arith import factor
from ..errors import BudgetExceeded
from .forms import BQF, BadDiscriminant, check_discriminant, compose, principal_form
from .structure import ClassGroupStructure, abelian_structure


def _check_negative(D: int) -> None:
    if D >= 0:
        raise BadDiscriminant(f"expected a negative discriminant, got {D}")
    check_discriminant(D)
    if -D > kernels.FORM_DISC_LIMIT:
        raise BudgetExceeded(f"|D| = {-D} is beyond the enumeration limit {kernels.FORM_DISC_LIMIT}")


@lru_cache(maxsize=4096)
def _forms_array(D: int) -> np.ndarray:
    _check_negative(D)
    arr = kernels.reduced_forms(D)
    arr.setflags(write=False)
    return arr


def reduced_forms_array(D: int) -> np.ndarray:
    """Rows (a, b, c) of all primitive reduced forms of discriminant D, sorted by (a, b)."""
    return _forms_array(D)


def enumerate_class_group(D: int) -> tuple[int, list[BQF]]:
    arr = _forms_array(D)
    return len(arr), [BQF(int(a), int(b), int(c)) for a, b, c in arr]


def class_number(D: int) -> int:
    return len(_forms_array(D))


def _is_principal(rows: np.ndarray, D: int) -> np.ndarray:
    p = principal_form(D)
    return (rows[:, 0] == p.a) & (rows[:, 1] == p.b) & (rows[:, 2] == p.c)


def element_orders(D: int) -> np.ndarray:
    """Order of every class, aligned with ``reduced_forms_array(D)``."""
    forms = _forms_array(D)
    h = len(forms)
    order = np.full(h, h, dtype=np.int64)
    for p, e in factor(h).factors:
        for _ in range(e):
            divisible = order % p == 0
            if not divisible.any():
                break
            cand = np.where(divisible, order // p, order)
            hit = _is_principal(kernels.forms_pow(forms, cand, D), D) & divisible
            order = np.where(hit, cand, order)
    return order


def torsion_count(D: int, n: int) -> int:
    """Number of classes x with x**n = 1."""
    forms = _forms_array(D)
    _check_budget(len(forms))
    return int(_is_principal(kernels.forms_pow(forms, n, D), D).sum())


def _check_budget(h: int) -> None:
    limit = budgets().classes
    if h > limit:
        raise BudgetExceeded(f"class group has {h} classes, budget is {limit}")


def group_structure(D: int) -> ClassGroupStructure:
    forms = _forms_array(D)
    h = len(forms)
    _check_budget(h)
    orders = [int(o) for o in element_orders(D)]
    elements = [BQF(int(a), int(b), int(c)) for a, b, c in forms]
    divisors, gens = abelian_structure(elements, orders, compose, principal_form(D))
    return ClassGroupStructure(D=D, h=h, elementary_divisors=divisors, generators=gens)
