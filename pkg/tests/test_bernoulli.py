import pytest

from cyclo_scan.bernoulli import (
    IrregularPair,
    Method,
    bernoulli_mod_p,
    index_of_irregularity,
    irregular_pairs,
    raw_bernoulli,
)
from cyclo_scan.errors import InvalidPrimeError
from cyclo_scan.primes import primes_in_range

from oracles import bernoulli_residues, brute_irregular

METHODS = list(Method)


@pytest.mark.parametrize("method", METHODS)
def test_small_values(method):
    t = bernoulli_mod_p(7, method)
    assert t[2] == 6  # 1/6
    assert t[4] == 3  # -1/30
    assert sorted(t.values) == [2, 4]


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("p", primes_in_range(5, 110))
def test_against_exact_rationals(p, method):
    assert raw_bernoulli(p, method) == bernoulli_residues(p)


@pytest.mark.parametrize("p, ks", [
    (13, []),
    (37, [32]),
    (59, [44]),
    (67, [58]),
    (101, [68]),
    (103, [24]),
    (157, [62, 110]),
])
def test_irregular_pairs_frozen(p, ks):
    assert brute_irregular(p) == ks
    for method in METHODS:
        assert irregular_pairs(p, method) == [IrregularPair(p, k) for k in ks]


@pytest.mark.parametrize("p, count", [(13, 0), (37, 1), (157, 2)])
def test_index_of_irregularity(p, count):
    assert index_of_irregularity(p) == count


def test_every_even_index_present():
    t = bernoulli_mod_p(101)
    assert list(t.values) == list(range(2, 99, 2))


def test_odd_vanishing_and_b1():
    for p in primes_in_range(5, 400):
        raw = raw_bernoulli(p, Method.RECURRENCE_ORACLE)
        assert raw[1] * 2 % p == p - 1
        assert all(raw[k] == 0 for k in range(3, p - 2, 2))


def test_serialization_is_method_independent():
    tables = [bernoulli_mod_p(211, m) for m in METHODS]
    assert len({t.serialize() for t in tables}) == 1
    assert tables[0].dump_lines()[:2] == ["211,2,176", "211,4,7"]


def test_emitted_pairs_are_zeros():
    for p in primes_in_range(5, 500):
        t = bernoulli_mod_p(p)
        for pair in irregular_pairs(p, table=t):
            assert pair.k % 2 == 0 and 2 <= pair.k <= p - 3 and t[pair.k] == 0


@pytest.mark.parametrize("bad", [2, 3, 4, 9, 91])
def test_invalid_primes(bad):
    with pytest.raises(InvalidPrimeError):
        bernoulli_mod_p(bad)
