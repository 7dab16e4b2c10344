import pytest
from hypothesis import given, strategies as st

from cyclo_scan.cohomology import (
    CharPower,
    LocalDims,
    ad0_h0,
    balanced_check,
    balanced_ledger,
    local_h_dims,
    tangent_dim,
)
from cyclo_scan.errors import RangeError
from cyclo_scan.primes import primes_in_range

PRIMES = primes_in_range(5, 3500)


@pytest.mark.parametrize("p, j, dims", [(7, 0, (1, 2, 0)), (7, 1, (0, 2, 1)), (37, 5, (0, 1, 0))])
def test_local_dims_examples(p, j, dims):
    assert local_h_dims(CharPower(p, j)).as_tuple() == dims


def test_exponent_is_canonical():
    assert CharPower(7, -1).j == 5 and CharPower(7, 13).j == 1


def test_local_dims_rejects_bad_euler():
    with pytest.raises(ValueError):
        LocalDims(1, 1, 1)


@given(st.sampled_from(PRIMES), st.integers(-10**6, 10**6))
def test_euler_and_duality(p, j):
    d = local_h_dims(CharPower(p, j))
    assert d.h1 - d.h0 - d.h2 == 1
    assert d.h2 == local_h_dims(CharPower(p, 1 - j)).h0


@pytest.mark.parametrize("p, i, h0", [(37, 5, 1), (101, 33, 1), (7, 6, 3)])
def test_ad0_h0(p, i, h0):
    assert ad0_h0(p, i) == h0


@pytest.mark.parametrize("p, i", [(37, 5), (101, 33), (157, 47)])
def test_tangent_dim_and_balanced(p, i):
    assert tangent_dim(p, i) == 2
    assert balanced_check(p, i)


def test_degenerate_not_balanced():
    assert not balanced_check(7, 6)


@given(st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p - 2))))
def test_ad0_h0_is_one_off_the_degenerate_exponent(pi):
    p, i = pi
    assert ad0_h0(p, i) == 1


def test_range_errors():
    for i in (0, 37):
        with pytest.raises(RangeError):
            ad0_h0(37, i)


def test_ledger_rows():
    rows = balanced_ledger(37, 5)
    assert rows["chi^-i"]["j"] == 31
    assert (rows["chi"]["h0"], rows["chi"]["h1"], rows["chi"]["h2"]) == (0, 2, 1)
