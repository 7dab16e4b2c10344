"""Finite models of SL2(Z_p): SL2(Z/p^n), principal congruence subgroups,
breadth-first subgroup closure, and the level 2 -> 3 lifting check.

Matrices are keyed by the integer ((a*q + b)*q + c)*q + d with q = p^n.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from . import _backend
from .errors import ElementBudgetError, InvalidPrimeError, RangeError
from .fp import prime_field
from .primes import U64_MAX

DEFAULT_ELEMENT_BUDGET = 40_000_000
BUDGET_ENV = "CYCLO_SCAN_ELEMENT_BUDGET"
LEMMA_PRIMES = frozenset({5, 7})


def element_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_ELEMENT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


@dataclass(frozen=True)
class Mat2ModPn:
    a: int
    b: int
    c: int
    d: int
    p: int
    n: int

    def __post_init__(self):
        q = self.q
        if any(not 0 <= x < q for x in self.entries):
            raise ValueError("entries must be canonical residues mod p^n")
        if (self.a * self.d - self.b * self.c) % q != 1 % q:
            raise ValueError(f"determinant is not 1 mod {q}")

    @classmethod
    def of(cls, rows, p: int, n: int) -> Mat2ModPn:
        (a, b), (c, d) = rows
        q = p**n
        return cls(a % q, b % q, c % q, d % q, p, n)

    @classmethod
    def identity(cls, p: int, n: int) -> Mat2ModPn:
        return cls(1, 0, 0, 1, p, n)

    @classmethod
    def from_key(cls, key: int, p: int, n: int) -> Mat2ModPn:
        q = p**n
        key, d = divmod(key, q)
        key, c = divmod(key, q)
        a, b = divmod(key, q)
        return cls(a, b, c, d, p, n)

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def key(self) -> int:
        q = self.q
        return ((self.a * q + self.b) * q + self.c) * q + self.d

    def __matmul__(self, other: Mat2ModPn) -> Mat2ModPn:
        if (other.p, other.n) != (self.p, self.n):
            raise ValueError("level mismatch")
        q = self.q
        return Mat2ModPn(
            (self.a * other.a + self.b * other.c) % q,
            (self.a * other.b + self.b * other.d) % q,
            (self.c * other.a + self.d * other.c) % q,
            (self.c * other.b + self.d * other.d) % q,
            self.p,
            self.n,
        )

    def inverse(self) -> Mat2ModPn:
        q = self.q
        return Mat2ModPn(self.d, -self.b % q, -self.c % q, self.a, self.p, self.n)

    def as_rows(self):
        return [[self.a, self.b], [self.c, self.d]]


@dataclass(frozen=True)
class SubgroupClosure:
    p: int
    n: int
    generators: tuple[Mat2ModPn, ...]
    elements: frozenset[int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Mat2ModPn) -> bool:
        return (m.p, m.n) == (self.p, self.n) and m.key in self.elements

    def __len__(self):
        return len(self.elements)

    def matrices(self):
        for key in sorted(self.elements):
            yield Mat2ModPn.from_key(key, self.p, self.n)

    def issubset(self, other: SubgroupClosure) -> bool:
        return (self.p, self.n) == (other.p, other.n) and self.elements <= other.elements


def _check_level(p, n):
    if not isinstance(p, int) or p < 2:
        raise InvalidPrimeError(f"bad prime {p!r}")
    prime_field(p)
    if n < 1:
        raise RangeError(f"level must be >= 1, got {n}")


def group_order(p: int, n: int) -> int:
    """|SL2(Z/p^n)| = p^(3n-2) (p^2 - 1)."""
    _check_level(p, n)
    order = p ** (3 * n - 2) * (p * p - 1)
    if order > U64_MAX:
        raise OverflowError(f"|SL2(Z/{p}^{n})| exceeds 64 bits")
    return order


def _guard(size, budget):
    budget = element_budget() if budget is None else budget
    if size > budget:
        raise ElementBudgetError(f"{size} elements exceed the budget of {budget}")
    return budget


def pcs_elements(p: int, m: int, n: int, budget: int | None = None) -> SubgroupClosure:
    """{A in SL2(Z/p^n) : A = I mod p^m}, of order p^(3(n-m))."""
    _check_level(p, n)
    if not 1 <= m <= n:
        raise RangeError(f"depth m={m} outside [1, {n}]")
    q = p**n
    step = p**m
    span = p ** (n - m)
    _guard(span**3, budget)
    q2, q3 = q * q, q * q * q
    keys = set()
    for x in range(span):
        a = 1 + step * x
        a_inv = pow(a, -1, q)
        for y in range(span):
            b = step * y
            for z in range(span):
                c = step * z
                d = (1 + b * c) * a_inv % q
                keys.add(a * q3 + b * q2 + c * q + d)
    gens = (
        Mat2ModPn.of([[1, step], [0, 1]], p, n),
        Mat2ModPn.of([[1, 0], [step, 1]], p, n),
        Mat2ModPn.of([[1 + step, 0], [0, pow(1 + step, -1, q)]], p, n),
    )
    if m == n:
        gens = (Mat2ModPn.identity(p, n),)
    return SubgroupClosure(p, n, gens, frozenset(keys))


def closure(generators, budget: int | None = None) -> SubgroupClosure:
    """Subgroup generated by ``generators``, by breadth-first right multiplication."""
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    p, n = gens[0].p, gens[0].n
    if any((g.p, g.n) != (p, n) for g in gens):
        raise ValueError("generators live at different levels")
    budget = _guard(0, budget)
    keys = _backend.closure_keys([g.entries for g in gens], p**n, budget)
    if keys is None:
        raise ElementBudgetError(f"closure exceeds the budget of {budget} elements")
    return SubgroupClosure(p, n, gens, frozenset(keys))


def contains_pcs(X: SubgroupClosure, m: int, budget: int | None = None) -> bool:
    if m > X.n:
        raise RangeError(f"depth {m} exceeds level {X.n}")
    pcs = pcs_elements(X.p, m, X.n, budget)
    return pcs.elements <= X.elements


def reduce_level(obj, target: int):
    """Entrywise reduction mod p^target of a matrix or of a whole closure."""
    if target < 1 or target > obj.n:
        raise RangeError(f"target level {target} outside [1, {obj.n}]")
    if isinstance(obj, Mat2ModPn):
        return Mat2ModPn.of(obj.as_rows(), obj.p, target)
    p, n = obj.p, obj.n
    if target == n:
        return obj
    q_t = p**target
    q_t2, q_t3 = q_t * q_t, q_t**3
    q = p**n
    image = set()
    for key in obj.elements:
        key, d = divmod(key, q)
        key, c = divmod(key, q)
        a, b = divmod(key, q)
        image.add((a % q_t) * q_t3 + (b % q_t) * q_t2 + (c % q_t) * q_t + d % q_t)
    gens = tuple(reduce_level(g, target) for g in obj.generators)
    return SubgroupClosure(p, target, gens, frozenset(image))


def standard_generators(p: int, n: int) -> tuple[Mat2ModPn, Mat2ModPn]:
    """Elementary matrices generating all of SL2(Z/p^n)."""
    return (Mat2ModPn.of([[1, 1], [0, 1]], p, n), Mat2ModPn.of([[1, 0], [1, 1]], p, n))


def pcs_generators(p: int, n: int = 2) -> tuple[Mat2ModPn, ...]:
    """I + p e12, I + p e21 and diag(1+p, (1+p)^-1) at level n."""
    q = p**n
    return (
        Mat2ModPn.of([[1, p], [0, 1]], p, n),
        Mat2ModPn.of([[1, 0], [p, 1]], p, n),
        Mat2ModPn.of([[1 + p, 0], [0, pow(1 + p, -1, q)]], p, n),
    )


def random_lift(g: Mat2ModPn, rng: random.Random) -> Mat2ModPn:
    """Uniform lift of g to SL2(Z/p^(n+1)); needs a to be a unit."""
    p, n = g.p, g.n
    q_lo, q_hi = p**n, p ** (n + 1)
    if g.a % p == 0:
        raise ValueError("lift parametrization needs a unit top-left entry")
    a = g.a + q_lo * rng.randrange(p)
    b = g.b + q_lo * rng.randrange(p)
    c = g.c + q_lo * rng.randrange(p)
    d = (1 + b * c) * pow(a, -1, q_hi) % q_hi
    return Mat2ModPn(a, b, c, d, p, n + 1)


@dataclass(frozen=True)
class TrialResult:
    trial: int
    lifts: tuple[Mat2ModPn, ...]
    closure_order: int
    contains_pcs: bool
    outcome: str  # "pass" | "insufficient_generators" | "lemma_violation"


@dataclass(frozen=True)
class LemmaVerdict:
    p: int
    trials: int
    seed: int
    base_generates: bool
    pcs_order_level2: int
    pcs_order_level3: int
    results: tuple[TrialResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.outcome == "pass" for r in self.results)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "levels": [2, 3],
            "trials": self.trials,
            "seed": self.seed,
            "base_generates_level2_pcs": self.base_generates,
            "pcs_order_level2": self.pcs_order_level2,
            "pcs_order_level3": self.pcs_order_level3,
            "results": [
                {
                    "trial": r.trial,
                    "lifts": [g.as_rows() for g in r.lifts],
                    "closure_order": r.closure_order,
                    "contains_pcs": r.contains_pcs,
                    "outcome": r.outcome,
                }
                for r in self.results
            ],
            "passed": sum(r.outcome == "pass" for r in self.results),
            "all_pass": self.all_pass,
        }


def lemma34_finite_check(p: int, trials: int, seed: int,
                         generator_subset: tuple[int, ...] | None = None,
                         allowed_primes=LEMMA_PRIMES,
                         budget: int | None = None) -> LemmaVerdict:
    """Lift a generating set of the level-2 congruence subgroup to level 3 at
    random, ``trials`` times, and test whether each lift still generates the
    level-3 congruence subgroup.

    ``generator_subset`` picks which of the three standard generators to lift;
    a trial whose level-2 generators fail to generate is reported as
    ``insufficient_generators`` rather than as a counterexample.
    """
    if p not in allowed_primes:
        raise RangeError(f"p={p} not in the configured set {sorted(allowed_primes)}")
    if trials < 1:
        raise RangeError("trials must be >= 1")
    base = pcs_generators(p, 2)
    if generator_subset is not None:
        base = tuple(base[j] for j in generator_subset)
    pcs2 = pcs_elements(p, 1, 2, budget)
    pcs3 = pcs_elements(p, 1, 3, budget)
    base_generates = closure(base, budget).elements == pcs2.elements
    rng = random.Random(seed)
    results = []
    for t in range(trials):
        lifts = tuple(random_lift(g, rng) for g in base)
        X = closure(lifts, budget)
        ok = pcs3.elements <= X.elements
        if ok:
            outcome = "pass"
        elif not base_generates:
            outcome = "insufficient_generators"
        else:
            outcome = "lemma_violation"
        results.append(TrialResult(t, lifts, X.order, ok, outcome))
    return LemmaVerdict(p, trials, seed, base_generates, pcs2.order, pcs3.order, tuple(results))
