"""Hot inner loops: reduced-form enumeration, batched form powers, r3 counting.

Two interchangeable implementations live here: ``_numba`` (compiled with
``@njit``) and ``_numpy`` (vectorized, no compiler). The active one is picked
once at import from ``CLASSFORGE_KERNELS``; numba is used when it imports and
the variable does not ask for ``numpy``.

All kernels use int64. Callers must keep |D| <= FORM_DISC_LIMIT and
N <= R3_LIMIT and fall back to the pure-Python paths beyond that.
"""

from __future__ import annotations

from types import ModuleType

import numpy as np

from .._config import kernel_backend
from . import _numpy

try:
    from . import _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

HAS_NUMBA = _numba is not None

FORM_DISC_LIMIT = 2**31
R3_LIMIT = 2**60

_BACKENDS = {"numpy": _numpy}
if HAS_NUMBA:
    _BACKENDS["numba"] = _numba


def backend_module(name: str) -> ModuleType:
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


BACKEND = "numba" if HAS_NUMBA and kernel_backend() == "numba" else "numpy"
_active = backend_module(BACKEND)


def reduced_forms(D: int) -> np.ndarray:
    """Primitive reduced positive definite forms of discriminant D < 0, as rows (a, b, c)."""
    return _active.reduced_forms(np.int64(D))


def forms_pow(forms: np.ndarray, exps, D: int) -> np.ndarray:
    exps = np.broadcast_to(np.asarray(exps, dtype=np.int64), (forms.shape[0],))
    return _active.forms_pow(np.ascontiguousarray(forms, dtype=np.int64),
                             np.ascontiguousarray(exps), np.int64(D))


def compose_pairs(left: np.ndarray, right: np.ndarray, D: int) -> np.ndarray:
    return _active.compose_pairs(np.ascontiguousarray(left, dtype=np.int64),
                                 np.ascontiguousarray(right, dtype=np.int64), np.int64(D))


def r3_count(N: int) -> int:
    return int(_active.r3_count(np.int64(N)))


def warmup() -> None:
    """Trigger compilation (or cache load) of every kernel on tiny inputs."""
    forms = reduced_forms(-23)
    forms_pow(forms, 3, -23)
    compose_pairs(forms, forms, -23)
    r3_count(3)
