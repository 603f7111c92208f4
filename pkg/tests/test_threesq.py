from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from classforge.errors import BudgetExceeded
from classforge.threesq import (
    Twelfths,
    conductor_split,
    divisibility_report,
    hurwitz,
    hurwitz_by_forms,
    r3_bruteforce,
    r3_gauss,
)


def r3_naive(N):
    """Count (x, y, z) in Z^3 with x^2 + y^2 + z^2 = N by a triple loop."""
    m = int(N**0.5) + 1
    return sum(1 for x in range(-m, m + 1) for y in range(-m, m + 1) for z in range(-m, m + 1)
               if x * x + y * y + z * z == N)


@pytest.mark.parametrize("N,num12", [(3, 4), (4, 6), (12, 16), (23, 36), (7, 12), (8, 12), (15, 24)])
def test_hurwitz_anchors(N, num12):
    assert hurwitz(N) == Twelfths(num12)
    assert hurwitz_by_forms(N) == Twelfths(num12)


def test_hurwitz_vanishes():
    assert hurwitz(1) == hurwitz(2) == hurwitz(5) == Twelfths(0)


def test_hurwitz_matches_weighted_form_count():
    for N in range(1, 3000):
        assert hurwitz(N) == hurwitz_by_forms(N), N


def test_twelfths():
    t = Twelfths(4)
    assert t.as_fraction() == Fraction(1, 3)
    assert str(t) == "1/3"
    assert t.times(24) == 8
    assert (t + Twelfths(2)) == Twelfths(6)
    assert 3 * t == Twelfths(12)
    with pytest.raises(ArithmeticError):
        t.times(1)


def test_conductor_split():
    assert conductor_split(3) == (1, -3)
    assert conductor_split(12) == (2, -3)
    assert conductor_split(4) == (1, -4)
    assert conductor_split(16) == (2, -4)
    assert conductor_split(1347) == (1, -1347)
    assert conductor_split(665304) == (1, -665304)


@pytest.mark.parametrize("N,r", [(1, 6), (2, 12), (3, 8), (4, 6), (5, 24), (6, 24), (7, 0), (9, 30)])
def test_r3_small(N, r):
    assert r3_gauss(N) == r == r3_bruteforce(N) == r3_naive(N)


def test_r3_naive_agreement():
    for N in range(1, 300):
        assert r3_bruteforce(N) == r3_naive(N)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10**7))
def test_routes_agree_sampled(N):
    assert r3_gauss(N) == r3_bruteforce(N)


@given(st.integers(1, 10**6), st.integers(1, 4))
def test_r3_scales_by_four(N, k):
    assert r3_gauss(4**k * N) == r3_gauss(N)


def test_r3_worked_values():
    assert r3_gauss(1347) == 144
    assert r3_gauss(318003) == 2304
    assert r3_gauss(166326) == 5760
    assert r3_gauss(20511085) == 24000
    assert r3_gauss(8388527) == 0


def test_brute_force_budget(monkeypatch):
    monkeypatch.setenv("CLASSFORGE_BUDGET", "r3=1000")
    with pytest.raises(BudgetExceeded):
        r3_bruteforce(1001)
    rep = divisibility_report(1347, 3)
    assert rep.status_of("routes agree").value == "SKIPPED"


def test_divisibility_report():
    rep = divisibility_report(1347, 3)
    assert rep.passed
    assert rep.data["gcd_N_r"] == 3
    assert rep.status_of("72 | r(N)").value == "PASS"
    rep = divisibility_report(20511085, 5)
    assert rep.status_of("60 | r(N)").value == "PASS"
    with pytest.raises(ValueError):
        divisibility_report(10, 4)
