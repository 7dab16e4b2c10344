"""Dimensions of local Galois cohomology of powers of the mod-p cyclotomic
character over Q_p, via the local Euler characteristic and Tate duality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPrimeError, RangeError
from .fp import prime_field


@dataclass(frozen=True)
class CharPower:
    p: int
    j: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 5:
            raise InvalidPrimeError(f"need a prime p >= 5, got {self.p!r}")
        prime_field(self.p)
        object.__setattr__(self, "j", self.j % (self.p - 1))

    def inverse(self) -> CharPower:
        return CharPower(self.p, -self.j)

    def dual(self) -> CharPower:
        """Tate dual chi^(1-j)."""
        return CharPower(self.p, 1 - self.j)


@dataclass(frozen=True)
class LocalDims:
    h0: int
    h1: int
    h2: int

    def __post_init__(self):
        if self.h1 != self.h0 + self.h2 + 1:
            raise ValueError(f"Euler characteristic violated: {self}")

    def as_tuple(self):
        return (self.h0, self.h1, self.h2)


def _h0(c: CharPower) -> int:
    return 1 if c.j == 0 else 0


def local_h_dims(c: CharPower) -> LocalDims:
    h0 = _h0(c)
    h2 = _h0(c.dual())
    return LocalDims(h0, h0 + h2 + 1, h2)


def _check_i(p, i):
    # Degenerate i = 0 mod (p-1) is allowed through for tests; the scanner never emits it.
    if not 1 <= i <= p - 1:
        raise RangeError(f"i={i} outside [1, p-1] for p={p}")


def ad0_h0(p: int, i: int) -> int:
    """dim H^0 of Ad^0 restricted to G_p, through chi^i + 1 + chi^-i."""
    _check_i(p, i)
    return sum(local_h_dims(CharPower(p, j)).h0 for j in (i, 0, -i))


def tangent_dim(p: int, i: int) -> int:
    """dim H^1(G_p, Diag(rho-bar)); Diag is the trivial character."""
    _check_i(p, i)
    return local_h_dims(CharPower(p, 0)).h1


def balanced_check(p: int, i: int) -> bool:
    return tangent_dim(p, i) == ad0_h0(p, i) + 1 == 2


def balanced_ledger(p: int, i: int) -> dict:
    """Dimension ledger for chi^i, trivial, chi^-i and chi."""
    _check_i(p, i)
    rows = {}
    for name, j in (("chi^i", i), ("trivial", 0), ("chi^-i", -i), ("chi", 1)):
        d = local_h_dims(CharPower(p, j))
        rows[name] = {"j": CharPower(p, j).j, "h0": d.h0, "h1": d.h1, "h2": d.h2}
    return rows
