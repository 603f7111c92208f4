import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from classforge import kernels
from classforge.formclass import (
    BQF,
    BadDiscriminant,
    MismatchedDiscriminant,
    NotImaginary,
    SquareDiscriminant,
    class_number,
    compose,
    element_orders,
    enumerate_class_group,
    group_structure,
    narrow_class_group,
    narrow_group,
    p_rank,
    power,
    principal_form,
    reduce,
    reduce_indefinite,
    scholz_check,
    torsion_count,
)
from classforge.formclass.imaginary import reduced_forms_array
from classforge.formclass.real import is_reduced_indefinite, reduced_indefinite_forms
from classforge.formclass.scholz import ScholzVerdict
from classforge.formclass.structure import abelian_structure

from oracles import analytic_class_number, brute_narrow_cycles, brute_reduced_forms, is_fundamental

NEG_DISCS = [D for D in range(-3, -10**4, -1) if D % 4 in (0, 1)]


# -- forms -------------------------------------------------------------------


def test_form_basics():
    f = BQF(2, 1, 3)
    assert f.D == -23
    assert f.inverse() == BQF(2, -1, 3)
    assert principal_form(-23) == BQF(1, 1, 6)
    assert principal_form(-20) == BQF(1, 0, 5)
    with pytest.raises(BadDiscriminant):
        principal_form(-22)


def test_reduce_and_errors():
    assert reduce(BQF(6, 5, 2)) == BQF(2, -1, 3)
    with pytest.raises(NotImaginary):
        reduce(BQF(1, 3, 1))
    with pytest.raises(MismatchedDiscriminant):
        compose(BQF(2, 1, 3), BQF(1, 1, 1))


@settings(max_examples=200)
@given(st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(-100, 100),
       st.integers(-100, 100), st.integers(-100, 100), st.integers(-100, 100))
def test_reduce_is_class_invariant(a, b, p, q, r, t):
    # a positive definite form moved by an SL2(Z) matrix reduces to the same form
    c = (b * b + 4 * a * 7 + 3) // (4 * a) + 1  # make D negative
    f = BQF(a, b, c)
    if f.D >= 0 or p * t - q * r != 1:
        p, q, r, t = 1, 1, 0, 1
    g = BQF(f.a * p * p + f.b * p * r + f.c * r * r,
            2 * f.a * p * q + f.b * (p * t + q * r) + 2 * f.c * r * t,
            f.a * q * q + f.b * q * t + f.c * t * t)
    assert reduce(f) == reduce(g)


def test_power():
    f = BQF(2, 1, 3)
    assert power(f, 3) == principal_form(-23)
    assert power(f, -1) == f.inverse()
    assert power(f, 0) == principal_form(-23)


# -- imaginary class groups --------------------------------------------------


@pytest.mark.parametrize("D,h", [(-3, 1), (-4, 1), (-23, 3), (-1347, 6), (-3299, 27),
                                 (-665304, 480), (-8388527, 2310), (-82044340, 2000)])
def test_class_number_anchors(D, h):
    assert class_number(D) == h


def test_reduced_forms_match_brute_force():
    for D in NEG_DISCS[:2500]:
        assert [tuple(map(int, r)) for r in reduced_forms_array(D)] == brute_reduced_forms(D), D


@settings(max_examples=50, deadline=None)
@given(st.integers(2500, 250000), st.booleans())
def test_reduced_forms_match_brute_force_sampled(k, even):
    D = -4 * k if even else -(4 * k + 3)
    assert [tuple(map(int, r)) for r in reduced_forms_array(D)] == brute_reduced_forms(D)


def test_class_number_matches_analytic_formula():
    rng = random.Random(0)
    fundamentals = [D for D in NEG_DISCS if is_fundamental(D)]
    for D in fundamentals[:200] + rng.sample(fundamentals, 100):
        assert class_number(D) == analytic_class_number(D), D


def _table(D):
    forms = reduced_forms_array(D)
    h = len(forms)
    index = {tuple(map(int, f)): i for i, f in enumerate(forms)}
    ii, jj = np.meshgrid(np.arange(h), np.arange(h), indexing="ij")
    prods = kernels.compose_pairs(forms[ii.ravel()], forms[jj.ravel()], D)
    table = np.array([index[tuple(map(int, p))] for p in prods]).reshape(h, h)
    return forms, table, index


def test_group_axioms_exhaustive():
    for D in range(-3, -2001, -1):
        if D % 4 not in (0, 1):
            continue
        forms, T, index = _table(D)
        h = len(forms)
        e = index[principal_form(D).astuple()]
        idx = np.arange(h)
        assert (T[e] == idx).all() and (T[:, e] == idx).all(), D
        assert (T == T.T).all(), D
        assert all((row == e).sum() == 1 for row in T), D  # each element has one inverse
        for i in range(h):
            inv = index[reduce(BQF(*map(int, forms[i])).inverse()).astuple()]
            assert T[i, inv] == e
        # associativity on all triples
        assert (T[T[:, :, None], idx[None, None, :]] == T[idx[:, None, None], T[None, :, :]]).all(), D


def test_kernel_composition_matches_python():
    for D in [-23, -56, -84, -420, -1347, -3299, -3896]:
        forms, T, _ = _table(D)
        for i in range(len(forms)):
            for j in range(len(forms)):
                f, g = BQF(*map(int, forms[i])), BQF(*map(int, forms[j]))
                assert compose(f, g).astuple() == tuple(map(int, forms[T[i, j]]))


@pytest.mark.parametrize("D,divs", [(-23, [3]), (-3, [1]), (-84, [2, 2]), (-3299, [3, 9]),
                                    (-1347, [6]), (-665304, [2, 2, 120])])
def test_structure_anchors(D, divs):
    s = group_structure(D)
    assert s.elementary_divisors == divs
    assert math.prod(divs) == s.h


@pytest.mark.parametrize("D", [-84, -420, -3299, -4027, -12131, -40436, -1347, -3896])
def test_structure_generators(D):
    s = group_structure(D)
    divs = s.elementary_divisors
    assert all(divs[i + 1] % divs[i] == 0 for i in range(len(divs) - 1))
    e = principal_form(D)
    for g, d in zip(s.generators, divs):
        orders = [k for k in range(1, d + 1) if power(g, k) == e]
        assert orders[0] == d
    # generators span the whole group
    span = {e}
    for g in s.generators:
        span = {compose(x, power(g, k)) for x in span for k in range(s.h)}
    assert len(span) == s.h


def test_element_orders_and_torsion_match_naive():
    for D in [-23, -84, -420, -3299, -1347, -4027, -12131]:
        h, forms = enumerate_class_group(D)
        e = principal_form(D)
        naive = [next(k for k in range(1, h + 1) if power(f, k) == e) for f in forms]
        assert list(element_orders(D)) == naive
        for n in (2, 3, 5, 9):
            assert torsion_count(D, n) == sum(1 for o in naive if n % o == 0)


def test_abelian_structure_on_cyclic_product():
    # Z/4 x Z/6 as pairs
    elems = [(x, y) for x in range(4) for y in range(6)]
    mul = lambda u, v: ((u[0] + v[0]) % 4, (u[1] + v[1]) % 6)
    orders = [math.lcm(4 // math.gcd(4, x), 6 // math.gcd(6, y)) for x, y in elems]
    divs, gens = abelian_structure(elems, orders, mul, (0, 0))
    assert divs == [2, 12]


# -- narrow class groups -----------------------------------------------------


@pytest.mark.parametrize("D,h", [(5, 1), (8, 1), (12, 2), (13, 1), (21, 2), (40, 2), (60, 4),
                                 (136, 4), (229, 3), (449, 1), (106001, 4)])
def test_narrow_class_numbers(D, h):
    assert narrow_class_group(D).h == h


def test_narrow_matches_brute_cycles():
    for D in range(5, 3000):
        if D % 4 not in (0, 1) or math.isqrt(D) ** 2 == D:
            continue
        G = narrow_group(D)
        cycles = brute_narrow_cycles(D)
        assert G.h == len(cycles), D
        assert sorted(sorted(c) for c in cycles) == sorted(sorted(f.astuple() for f in c) for c in G.cycles)


def test_narrow_229_odd_part():
    s = narrow_class_group(229)
    odd = s.h
    while odd % 2 == 0:
        odd //= 2
    assert odd == 3


def test_narrow_group_axioms():
    for D in range(5, 700):
        if D % 4 not in (0, 1) or math.isqrt(D) ** 2 == D:
            continue
        G = narrow_group(D)
        e, h = G.identity, G.h
        for i in range(h):
            assert G.mul(i, e) == i
            assert G.mul(i, G.inverse(i)) == e
            for j in range(h):
                assert G.mul(i, j) == G.mul(j, i)
                for k in range(h):
                    assert G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k))


def test_real_errors_and_reduction():
    with pytest.raises(SquareDiscriminant):
        narrow_class_group(16)
    with pytest.raises(BadDiscriminant):
        narrow_class_group(7)
    for f in reduced_indefinite_forms(229):
        assert is_reduced_indefinite(f)
        assert reduce_indefinite(f) == f
    assert is_reduced_indefinite(reduce_indefinite(BQF(7, 31, -26)))


def test_p_rank():
    assert p_rank(-3299, 3) == 2
    assert p_rank(-23, 3) == 1
    assert p_rank(229, 3) == 1
    assert p_rank(449, 3) == 0
    assert p_rank(-84, 2) == 2


# -- scholz ------------------------------------------------------------------


@pytest.mark.parametrize("dprime,rank", [(-1347, 0), (-318003, 0), (-166326, 0)])
def test_scholz_ranks(dprime, rank):
    rep = scholz_check(dprime)
    assert rep.data["rank3_real"] == rank
    assert rep.data["verdict"] is ScholzVerdict.REFUTED
    assert rep.status_of("reflection bounds r <= s <= r + 1").value == "PASS"


def test_scholz_confirmed_case():
    # h+(229) = 3, so a claimed 3-rank of 1 for Q(sqrt(229)) holds
    rep = scholz_check(-3 * 229, claimed_rank=1)
    assert rep.data["rank3_real"] == 1
    assert rep.data["verdict"] is ScholzVerdict.CONFIRMED


def test_scholz_not_applicable_and_errors():
    assert scholz_check(-15).data["verdict"] is ScholzVerdict.NOT_APPLICABLE
    for bad in (15, -10, -27):
        with pytest.raises(ValueError):
            scholz_check(bad)
