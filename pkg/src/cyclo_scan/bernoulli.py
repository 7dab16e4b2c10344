"""Bernoulli numbers mod p and irregular pairs.

Two independent routes are provided: the binomial recurrence, and inversion of
(e^x - 1)/x as a truncated power series (quadratic, or Newton/NTT when fast).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from . import _backend
from .errors import InconsistencyError, InvalidPrimeError
from .fp import FieldElement, Series, factorial_ints, prime_field, series_inverse


class Method(str, enum.Enum):
    RECURRENCE_ORACLE = "oracle"
    SERIES_INVERSION = "series"
    FAST_SERIES_INVERSION = "fast"


@dataclass(frozen=True)
class BernoulliTable:
    p: int
    values: Mapping[int, FieldElement]
    method: Method

    def __getitem__(self, k: int) -> int:
        return self.values[k].value

    def zeros(self) -> list[int]:
        return [k for k, v in self.values.items() if v.value == 0]

    def dump_lines(self) -> list[str]:
        return [f"{self.p},{k},{v.value}" for k, v in self.values.items()]

    def serialize(self) -> bytes:
        return "\n".join(self.dump_lines()).encode()


@dataclass(frozen=True, order=True)
class IrregularPair:
    p: int
    k: int


def _check_prime(p):
    if not isinstance(p, int) or p < 5:
        raise InvalidPrimeError(f"need a prime p >= 5, got {p!r}")
    prime_field(p)


def _raw_recurrence(p):
    return _backend.bernoulli_recurrence(p, p - 3)


def _raw_series(p, fast):
    n = p - 3
    fact, finv = factorial_ints(p, n + 1)
    # (e^x - 1)/x = sum x^n/(n+1)!
    e = Series(tuple(finv[1 : n + 2]), p)
    inv = series_inverse(e, fast=fast).coeffs
    return [inv[j] * fact[j] % p for j in range(n + 1)]


def raw_bernoulli(p: int, method: Method = Method.SERIES_INVERSION) -> list[int]:
    """B_0..B_{p-3} mod p, odd indices included."""
    _check_prime(p)
    method = Method(method)
    if method is Method.RECURRENCE_ORACLE:
        return _raw_recurrence(p)
    return _raw_series(p, fast=method is Method.FAST_SERIES_INVERSION)


def bernoulli_mod_p(p: int, method: Method = Method.SERIES_INVERSION) -> BernoulliTable:
    method = Method(method)
    raw = raw_bernoulli(p, method)
    if raw[1] != (p - 1) // 2:  # -1/2 mod p
        raise InconsistencyError(f"B_1 mod {p} is {raw[1]}, expected {(p - 1) // 2}")
    odd = [k for k in range(3, p - 2, 2) if raw[k]]
    if odd:
        raise InconsistencyError(f"odd Bernoulli numbers nonzero mod {p} at {odd[:5]}")
    values = {k: FieldElement(raw[k], p) for k in range(2, p - 2, 2)}
    return BernoulliTable(p, MappingProxyType(values), method)


def irregular_pairs(p: int, method: Method = Method.SERIES_INVERSION,
                    table: BernoulliTable | None = None) -> list[IrregularPair]:
    if table is None:
        table = bernoulli_mod_p(p, method)
    return [IrregularPair(p, k) for k in table.zeros()]


def index_of_irregularity(p: int, method: Method = Method.SERIES_INVERSION) -> int:
    return len(irregular_pairs(p, method))
