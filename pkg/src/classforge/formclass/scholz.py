"""3-ranks of real quadratic fields obtained from imaginary fields with 3 | h."""

from __future__ import annotations

from enum import Enum

from ..arith import is_squarefree
from ..errors import BudgetExceeded
from ..report import Report, Status, Verdict
from . import imaginary, real


class ScholzVerdict(str, Enum):
    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    NOT_APPLICABLE = "NOT_APPLICABLE"


def fundamental_discriminant(d: int) -> int:
    return d if d % 4 == 1 else 4 * d


def scholz_check(dprime: int, claimed_rank: int = 2) -> Report:
    """Compare the 3-rank of Q(sqrt(-dprime/3)) with ``claimed_rank``.

    The hypothesis is 3 | dprime and 3 | h(dprime). The computed rank is taken
    as ground truth; the report also checks the reflection inequalities
    r <= s <= r + 1 between the real 3-rank r and the imaginary 3-rank s of
    Q(sqrt(-3d)) as an internal consistency test.
    """
    if dprime >= 0 or dprime % 3 or not is_squarefree(dprime):
        raise ValueError(f"dprime must be negative, squarefree and divisible by 3, got {dprime}")
    d = -dprime // 3
    D_imag = fundamental_discriminant(dprime)
    D_real = fundamental_discriminant(d)
    report = Report(subject=f"3-rank of Q(sqrt({d})) from Q(sqrt({dprime}))")
    report.data.update(dprime=dprime, d=d, D_imaginary=D_imag, D_real=D_real,
                       claimed_rank=claimed_rank)

    if dprime % 8 == 5:
        report.verdicts.append(Verdict.check("dprime = 21 mod 24", dprime % 24 == 21,
                                             f"dprime mod 24 = {dprime % 24}"))
        report.verdicts.append(Verdict.check("d = 1 mod 8", d % 8 == 1, f"d mod 8 = {d % 8}"))
    report.verdicts.append(Verdict.check("3 does not divide d", d % 3 != 0))

    try:
        h_imag = imaginary.class_number(D_imag)
    except BudgetExceeded as exc:
        report.data["verdict"] = ScholzVerdict.BUDGET_EXCEEDED
        report.verdicts.append(Verdict("3 | h(dprime)", Status.SKIPPED, str(exc)))
        return report
    report.data["h_imaginary"] = h_imag
    if h_imag % 3:
        report.data["verdict"] = ScholzVerdict.NOT_APPLICABLE
        report.verdicts.append(Verdict("3 | h(dprime)", Status.SKIPPED,
                                       f"h({D_imag}) = {h_imag}; hypothesis fails, no claim tested"))
        report.conclusion = "hypothesis 3 | h(dprime) fails"
        return report
    report.verdicts.append(Verdict.check("3 | h(dprime)", True, f"h({D_imag}) = {h_imag}"))

    try:
        s_rank = imaginary.group_structure(D_imag).p_rank(3)
        narrow = real.narrow_class_group(D_real)
    except BudgetExceeded as exc:
        report.data["verdict"] = ScholzVerdict.BUDGET_EXCEEDED
        report.verdicts.append(Verdict("3-rank computed", Status.SKIPPED, str(exc)))
        return report
    r_rank = narrow.p_rank(3)
    report.data.update(
        rank3_imaginary=s_rank,
        rank3_real=r_rank,
        narrow_class_number=narrow.h,
        narrow_structure=narrow.elementary_divisors,
    )
    if D_imag == fundamental_discriminant(-3 * d):
        report.verdicts.append(Verdict.check(
            "reflection bounds r <= s <= r + 1", r_rank <= s_rank <= r_rank + 1,
            f"r = {r_rank}, s = {s_rank}"))
    verdict = ScholzVerdict.CONFIRMED if r_rank >= claimed_rank else ScholzVerdict.REFUTED
    report.data["verdict"] = verdict
    report.conclusion = (
        f"computed 3-rank of Q(sqrt({d})) is {r_rank}; claim 'at least {claimed_rank}' {verdict.value}"
    )
    return report
