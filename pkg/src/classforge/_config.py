"""Runtime knobs read from the environment.

``CLASSFORGE_BUDGET``
    Either a bare integer (the class-group budget, in classes) or a comma
    separated list of ``key=value`` pairs with keys ``classes``, ``r3``, ``scan``
    and ``rho`` (Pollard rho steps per cofactor).

``CLASSFORGE_KERNELS``
    ``numba`` (default when numba imports) or ``numpy`` to force the
    vectorized fallback kernels.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_CLASS_BUDGET = 10**6
DEFAULT_R3_BUDGET = 10**8
DEFAULT_SCAN_BOUND = 10**7
DEFAULT_RHO_BUDGET = 5 * 10**7


@dataclass(frozen=True)
class Budgets:
    classes: int = DEFAULT_CLASS_BUDGET
    r3: int = DEFAULT_R3_BUDGET
    scan: int = DEFAULT_SCAN_BOUND
    rho: int = DEFAULT_RHO_BUDGET


def parse_budget(text: str | None) -> Budgets:
    budgets = Budgets()
    if not text or not text.strip():
        return budgets
    text = text.strip()
    if "=" not in text:
        return replace(budgets, classes=int(text))
    updates = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in ("classes", "r3", "scan", "rho"):
            raise ValueError(f"unknown budget key {key!r} in CLASSFORGE_BUDGET")
        updates[key] = int(value)
    return replace(budgets, **updates)


def budgets() -> Budgets:
    return parse_budget(os.environ.get("CLASSFORGE_BUDGET"))


def kernel_backend() -> str:
    choice = os.environ.get("CLASSFORGE_KERNELS", "numba").strip().lower()
    if choice not in ("numba", "numpy"):
        raise ValueError(f"CLASSFORGE_KERNELS must be 'numba' or 'numpy', got {choice!r}")
    return choice
