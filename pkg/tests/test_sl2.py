import itertools
import random

import pytest

from cyclo_scan import sl2
from cyclo_scan.errors import ElementBudgetError, RangeError
from cyclo_scan.sl2 import (
    Mat2ModPn,
    closure,
    contains_pcs,
    group_order,
    lemma34_finite_check,
    pcs_elements,
    pcs_generators,
    reduce_level,
    standard_generators,
)

from oracles import brute_sl2, key


def M(rows, p=5, n=2):
    return Mat2ModPn.of(rows, p, n)


@pytest.mark.parametrize("p, n, order", [(5, 1, 120), (5, 2, 15000), (7, 1, 336)])
def test_group_order(p, n, order):
    assert group_order(p, n) == order


def test_group_order_overflow():
    with pytest.raises(OverflowError):
        group_order(5, 10)


def test_group_order_matches_enumeration():
    for q, (p, n) in ((5, (5, 1)), (7, (7, 1))):
        assert len(brute_sl2(q)) == group_order(p, n)


def test_determinant_invariant():
    with pytest.raises(ValueError):
        M([[1, 1], [1, 1]])
    g = M([[6, 0], [0, 21]])
    assert (g @ g.inverse()) == Mat2ModPn.identity(5, 2)
    assert Mat2ModPn.from_key(g.key, 5, 2) == g


@pytest.mark.parametrize("p, m, n, order", [(5, 1, 2, 125), (5, 2, 2, 1), (7, 1, 2, 343), (5, 1, 3, 5**6)])
def test_pcs_order(p, m, n, order):
    assert pcs_elements(p, m, n).order == order


def test_pcs_matches_brute_force():
    q = 25
    want = {key(x, q) for x in brute_sl2(q) if x[0] % 5 == 1 and x[1] % 5 == 0 and x[2] % 5 == 0 and x[3] % 5 == 1}
    assert pcs_elements(5, 1, 2).elements == want


def test_closure_identity():
    assert closure([Mat2ModPn.identity(5, 2)]).order == 1


def test_closure_example_generates_pcs():
    X = closure([M([[1, 5], [0, 1]]), M([[1, 0], [5, 1]]), M([[6, 0], [0, 21]])])
    assert X.order == 125 and X.elements == pcs_elements(5, 1, 2).elements


def test_closure_full_sl2_mod_5():
    X = closure(standard_generators(5, 1))
    assert X.elements == {key(x, 5) for x in brute_sl2(5)}


def test_closure_is_group_and_order_divides():
    X = closure([M([[2, 1], [1, 1]]), M([[1, 5], [0, 1]])])
    els = list(X.matrices())
    rng = random.Random(0)
    for a, b in (rng.sample(els, 2) for _ in range(200)):
        assert (a @ b) in X and a.inverse() in X
    assert Mat2ModPn.identity(5, 2) in X
    assert group_order(5, 2) % X.order == 0


def test_closure_independent_of_generator_order():
    gens = [M([[2, 1], [1, 1]]), M([[1, 5], [0, 1]]), M([[6, 0], [0, 21]])]
    ref = closure(gens).elements
    for perm in itertools.permutations(gens):
        assert closure(perm).elements == ref


def test_closure_budget_error():
    with pytest.raises(ElementBudgetError):
        closure(standard_generators(5, 2), budget=1000)


def test_budget_env(monkeypatch):
    monkeypatch.setenv(sl2.BUDGET_ENV, "50")
    with pytest.raises(ElementBudgetError):
        pcs_elements(5, 1, 2)
    monkeypatch.delenv(sl2.BUDGET_ENV)
    assert sl2.element_budget() == sl2.DEFAULT_ELEMENT_BUDGET


def test_contains_pcs_examples():
    assert contains_pcs(pcs_elements(5, 1, 2), 1)
    assert not contains_pcs(closure([Mat2ModPn.identity(5, 2)]), 1)
    full = closure(standard_generators(5, 2))
    assert full.order == 15000 and contains_pcs(full, 1)


def test_contains_pcs_monotone():
    small = closure([M([[1, 5], [0, 1]]), M([[1, 0], [5, 1]])])
    big = closure([M([[1, 5], [0, 1]]), M([[1, 0], [5, 1]]), M([[2, 1], [1, 1]])])
    assert small.issubset(big)
    for m in (1, 2):
        assert not contains_pcs(small, m) or contains_pcs(big, m)


def test_reduce_level():
    assert reduce_level(M([[6, 0], [0, 21]]), 1) == Mat2ModPn.identity(5, 1)
    assert reduce_level(pcs_elements(5, 1, 3), 2).elements == pcs_elements(5, 1, 2).elements
    X = pcs_elements(5, 1, 2)
    assert reduce_level(X, 2) is X
    with pytest.raises(RangeError):
        reduce_level(X, 0)


def test_reduce_level_is_homomorphism():
    X = closure(standard_generators(5, 2))
    els = list(X.matrices())
    rng = random.Random(1)
    image = reduce_level(X, 1)
    assert image.order == 120
    for a, b in (rng.sample(els, 2) for _ in range(100)):
        assert reduce_level(a @ b, 1) == reduce_level(a, 1) @ reduce_level(b, 1)


def test_random_lift_properties():
    rng = random.Random(5)
    for g in pcs_generators(7):
        lift = sl2.random_lift(g, rng)
        assert lift.n == 3 and reduce_level(lift, 2) == g


@pytest.mark.parametrize("p, trials, seed", [(5, 10, 0), (7, 5, 1)])
def test_lemma34_finite(p, trials, seed):
    v = lemma34_finite_check(p, trials, seed)
    assert v.base_generates and v.pcs_order_level3 == p**6
    assert v.all_pass and len(v.results) == trials


def test_lemma34_reproducible():
    a = lemma34_finite_check(5, 3, 42).to_dict()
    assert a == lemma34_finite_check(5, 3, 42).to_dict()


def test_lemma34_single_lift_is_insufficient():
    v = lemma34_finite_check(5, 1, 0, generator_subset=(0,))
    assert not v.all_pass
    assert not v.base_generates
    assert v.results[0].outcome == "insufficient_generators"


def test_lemma34_prime_set():
    with pytest.raises(RangeError):
        lemma34_finite_check(11, 1, 0)
