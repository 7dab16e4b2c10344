"""Prime-field residues and fixed-truncation power series over F_p."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _backend, ntt
from .errors import InvalidPrimeError, NonUnitError, RangeError, ZeroInverseError
from .primes import U64_MAX, is_prime


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.p}")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement((self.value + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement((self.value - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement((o - self.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value * o % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value % self.p, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * field_inv(FieldElement(o, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class PrimeField:
    """Ambient F_p; primality is checked here, once."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p > U64_MAX or p == 2 or not is_prime(p):
            raise InvalidPrimeError(f"{p} is not an odd prime below 2**64")
        self.p = p

    def __call__(self, x: int) -> FieldElement:
        return FieldElement(x % self.p, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


@lru_cache(maxsize=256)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def field_inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroInverseError(f"0 has no inverse mod {a.p}")
    return FieldElement(pow(a.value, -1, a.p), a.p)


@dataclass(frozen=True, slots=True)
class Series:
    """Power series truncated at degree ``len(coeffs) - 1``; trailing zeros kept."""

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError("coefficients must be canonical residues")

    @classmethod
    def from_ints(cls, values, p, degree=None):
        vals = [v % p for v in values]
        if degree is not None:
            vals = (vals + [0] * (degree + 1))[: degree + 1]
        return cls(tuple(vals), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(c, self.p) for c in self.coeffs)

    def __getitem__(self, n) -> FieldElement:
        return FieldElement(self.coeffs[n], self.p)

    def __len__(self):
        return len(self.coeffs)

    def __mul__(self, other: Series) -> Series:
        if other.p != self.p or other.degree != self.degree:
            raise ValueError("series must share modulus and truncation")
        p, n = self.p, len(self.coeffs)
        a, b = self.coeffs, other.coeffs
        out = [sum(a[j] * b[k - j] for j in range(k + 1)) % p for k in range(n)]
        return Series(tuple(out), p)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])


def series_inverse(s: Series, fast: bool = False) -> Series:
    """t with s*t = 1 mod x**(N+1).

    The quadratic recurrence is the default; ``fast=True`` selects Newton
    iteration over NTT convolution (p < 2**32).
    """
    if s.coeffs[0] == 0:
        raise NonUnitError("constant coefficient is zero")
    if fast:
        out = ntt.newton_inverse(s.coeffs, s.p)
    else:
        out = _backend.series_inverse(list(s.coeffs), s.p)
    return Series(tuple(out), s.p)


def factorial_ints(p: int, n: int) -> tuple[list[int], list[int]]:
    if n < 0 or n > p - 2:
        raise RangeError(f"degree bound {n} outside [0, p-2] for p={p}")
    fact = [1] * (n + 1)
    for k in range(1, n + 1):
        fact[k] = fact[k - 1] * k % p
    finv = [1] * (n + 1)
    finv[n] = pow(fact[n], -1, p)
    for k in range(n, 0, -1):
        finv[k - 1] = finv[k] * k % p
    return fact, finv


def factorial_table(p: int, n: int) -> tuple[list[FieldElement], list[FieldElement]]:
    """n! and (n!)^-1 mod p for 0..n; requires n <= p - 2."""
    fact, finv = factorial_ints(p, n)
    return [FieldElement(v, p) for v in fact], [FieldElement(v, p) for v in finv]
