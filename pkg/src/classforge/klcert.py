"""Karoubi-Lambre certificates.

A triple (a, b, n) certifies an element of order n in the class group of the
imaginary quadratic field of discriminant D when, writing
a**2 - 4*b**n = c**2 * D with D fundamental,

* gcd(a, b) = gcd(c, n) = 1,
* b is not +-1,
* n is odd and divides D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .arith import is_squarefree, squarefree_decompose
from .report import Report, Verdict

CHECK_NAMES = (
    "coprime_ab",
    "coprime_cn",
    "b_not_unit",
    "identity_holds",
    "n_divides_D",
    "D_negative",
    "n_odd",
)


class NotImaginary(ValueError):
    pass


class BadN(ValueError):
    pass


class CaseTag(str, Enum):
    FIVE_MOD_8 = "5mod8"
    TWO_MOD_4 = "2mod4"
    THREE_MOD_4 = "3mod4"
    OTHER = "other"

    @classmethod
    def of(cls, d: int) -> "CaseTag":
        if d % 8 == 5:
            return cls.FIVE_MOD_8
        if d % 4 == 2:
            return cls.TWO_MOD_4
        if d % 4 == 3:
            return cls.THREE_MOD_4
        return cls.OTHER

    @classmethod
    def parse(cls, text: str) -> "CaseTag":
        key = text.strip().lower().replace(" ", "")
        for tag in cls:
            if key in (tag.value, tag.name.lower()):
                return tag
        raise ValueError(f"unknown congruence case {text!r}")


@dataclass(frozen=True)
class QuadField:
    d: int
    D: int
    case_tag: CaseTag

    @classmethod
    def from_squarefree(cls, d: int) -> "QuadField":
        if d in (0, 1) or not is_squarefree(d):
            raise ValueError(f"{d} is not a squarefree integer other than 0, 1")
        D = d if d % 4 == 1 else 4 * d
        return cls(d, D, CaseTag.of(d))

    @property
    def degenerate(self) -> bool:
        """Fields with extra units, Q(sqrt(-1)) and Q(sqrt(-3))."""
        return self.d in (-1, -3)


@dataclass(frozen=True)
class KLCertificate:
    a: int
    b: int
    n: int
    c: int
    field: QuadField
    checks: dict[str, bool] = field(hash=False, compare=False)

    @property
    def d(self) -> int:
        return self.field.d

    @property
    def D(self) -> int:
        return self.field.D

    @property
    def value(self) -> int:
        return self.a * self.a - 4 * self.b**self.n

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "n": str(self.n),
            "c": str(self.c),
            "d": str(self.d),
            "D": str(self.D),
            "case": self.field.case_tag.value,
            "checks": dict(self.checks),
            "valid": self.valid,
        }


def _check_n(n: int) -> None:
    if n <= 1 or n % 2 == 0 or not is_squarefree(n):
        raise BadN(f"n must be a squarefree odd integer > 1, got {n}")


def compute_checks(a: int, b: int, n: int, c: int, D: int) -> dict[str, bool]:
    return {
        "coprime_ab": math.gcd(a, b) == 1,
        "coprime_cn": math.gcd(c, n) == 1,
        "b_not_unit": b not in (1, -1),
        "identity_holds": a * a - 4 * b**n == c * c * D,
        "n_divides_D": D % n == 0,
        "D_negative": D < 0,
        "n_odd": n % 2 == 1 and n > 1,
    }


def evaluate_triple(a: int, b: int, n: int) -> KLCertificate:
    _check_n(n)
    v = a * a - 4 * b**n
    if v >= 0:
        raise NotImaginary(f"a^2 - 4b^n = {v} is not negative")
    c0, d = squarefree_decompose(v)
    qf = QuadField.from_squarefree(d)
    if qf.D == d:
        c = c0
    elif c0 % 2 == 0:
        c = c0 // 2
    else:
        # v = c0^2 d with D = 4d cannot be written as c^2 D; keep c0, identity check fails
        c = c0
    return KLCertificate(a, b, n, c, qf, compute_checks(a, b, n, c, qf.D))


def verify_certificate(cert: KLCertificate) -> Report:
    """Recompute every condition from (a, b, n, c, D) and state the consequence."""
    checks = compute_checks(cert.a, cert.b, cert.n, cert.c, cert.D)
    report = Report(subject=f"KL certificate (a, b, n) = ({cert.a}, {cert.b}, {cert.n})")
    for name in CHECK_NAMES:
        report.verdicts.append(Verdict.check(name, checks[name]))
    report.data = cert.to_dict()
    report.data["checks"] = checks
    report.data["valid"] = all(checks.values())
    report.data["n_squarefree"] = is_squarefree(cert.n)
    report.data["degenerate_field"] = cert.field.degenerate
    if all(checks.values()):
        report.conclusion = (
            f"class group of Q(sqrt({cert.d})) contains an element of order {cert.n}"
        )
    return report
