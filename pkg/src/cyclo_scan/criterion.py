"""Per-prime eligibility: irregularity, p = 1 mod 4, Vandiver policy, and the
admissible odd eigenspace indices i = p - k coming from irregular pairs (p, k).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bernoulli import BernoulliTable, IrregularPair, Method, bernoulli_mod_p, irregular_pairs
from .errors import InconsistencyError, InvalidPrimeError, PolicyError, RangeError
from .fp import prime_field

# Vandiver's conjecture has been checked for all p below this bound.
DEFAULT_VANDIVER_BOUND = 1 << 31

CERTIFICATION_NOTE = (
    "C(chi^i) != 0 is inferred from p | B_{p-i} via Ribet's converse to "
    "Herbrand's theorem; Vandiver's conjecture is assumed, not verified."
)


class Certification(str, enum.Enum):
    HERBRAND_NECESSARY = "herbrand_necessary"
    RIBET_CERTIFIED = "ribet_certified"


class VandiverPolicy(str, enum.Enum):
    ASSUME = "assume"
    STRICT = "strict"  # refuse primes beyond the literature bound


class VandiverStatus(str, enum.Enum):
    ASSUMED_FROM_LITERATURE = "assumed"
    NOT_CHECKED = "not_checked"


@dataclass(frozen=True)
class AdmissibleIndex:
    i: int
    source_pair: IrregularPair
    certification: Certification = Certification.RIBET_CERTIFIED


@dataclass(frozen=True)
class PrimeReport:
    p: int
    residue_mod_4: int
    irregular_pairs: tuple[IrregularPair, ...]
    admissible_indices: tuple[AdmissibleIndex, ...]
    vandiver_status: VandiverStatus
    qualifies: bool
    det_exponent: tuple[int, ...] = field(default=())
    error: str | None = None

    @property
    def indices(self) -> list[int]:
        return [a.i for a in self.admissible_indices]


def admissible_indices(p: int, pairs: list[IrregularPair]) -> list[AdmissibleIndex]:
    """Odd indices i = p - k, 2 <= i <= p-3, i != (p-1)/2, in the order of ``pairs``."""
    out = []
    for pair in pairs:
        k = pair.k
        if pair.p != p or k % 2 or not 2 <= k <= p - 3:
            raise InconsistencyError(f"malformed irregular pair {pair}")
        if k == 2:
            raise InconsistencyError(f"B_2 = 1/6 cannot vanish mod {p}")
        i = p - k
        if i == 1 or i == p - 2 or i % 2 == 0:
            raise InconsistencyError(f"index {i} from {pair} escaped the range checks")
        if i == (p - 1) // 2:
            continue
        out.append(AdmissibleIndex(i, pair))
    return out


def det_exponent(p: int, i: int) -> int:
    """Exponent of the cyclotomic character giving det(rho) = chi^(i + p^2 (p-1))."""
    return i + p * p * (p - 1)


def vandiver_status(p: int, policy: VandiverPolicy = VandiverPolicy.ASSUME,
                    bound: int = DEFAULT_VANDIVER_BOUND) -> VandiverStatus:
    policy = VandiverPolicy(policy)
    if p < bound:
        return VandiverStatus.ASSUMED_FROM_LITERATURE
    if policy is VandiverPolicy.STRICT:
        raise PolicyError(f"p={p} exceeds the Vandiver verification bound {bound}")
    return VandiverStatus.NOT_CHECKED


def scan_prime(p: int, vandiver_policy: VandiverPolicy = VandiverPolicy.ASSUME,
               method: Method = Method.SERIES_INVERSION,
               bound: int = DEFAULT_VANDIVER_BOUND,
               table: BernoulliTable | None = None) -> PrimeReport:
    if not isinstance(p, int) or p < 5:
        raise InvalidPrimeError(f"need a prime p >= 5, got {p!r}")
    prime_field(p)
    status = vandiver_status(p, vandiver_policy, bound)
    if table is None:
        table = bernoulli_mod_p(p, method)
    pairs = irregular_pairs(p, table=table)
    adm = admissible_indices(p, pairs)
    qualifies = (
        bool(pairs)
        and p % 4 == 1
        and status is VandiverStatus.ASSUMED_FROM_LITERATURE
        and bool(adm)
    )
    if qualifies:
        for a in adm:
            failed = [c for c in hr_conditions(p, a.i) if c.passed is False]
            if failed:
                raise InconsistencyError(f"index {a.i} at p={p} fails {failed}")
    return PrimeReport(
        p=p,
        residue_mod_4=p % 4,
        irregular_pairs=tuple(pairs),
        admissible_indices=tuple(adm),
        vandiver_status=status,
        qualifies=qualifies,
        det_exponent=tuple(det_exponent(p, a.i) for a in adm),
    )


@dataclass(frozen=True)
class Condition:
    id: str
    description: str
    passed: bool | None  # None: structural, not computed
    note: str = ""


def hr_conditions(p: int, i: int) -> list[Condition]:
    """Computable conditions on rho-bar = [[chi^i, *], [0, 1]] for the lifting theorem."""
    if not 1 <= i <= p - 2:
        raise RangeError(f"i={i} outside [1, p-2] for p={p}")
    m = p - 1
    structural = "structural: true-by-construction"
    return [
        Condition("0", "p != 2", p != 2),
        Condition("1", "rho-bar indecomposable", None, structural),
        Condition("2", "phi^2 != 1, i.e. 2i != 0 mod (p-1)", (2 * i) % m != 0),
        Condition("3", "phi != chi^(+-1), i.e. i != +-1 mod (p-1)", i % m not in (1, m - 1)),
        Condition("4", "coefficient field is F_p", None, structural),
        Condition("5a", "rho-bar odd, i.e. i odd", i % 2 == 1),
        Condition("5b", "rho-bar|G_p not unramified, i.e. i != 0 mod (p-1)", i % m != 0),
    ]


def hr_all_pass(p: int, i: int) -> bool:
    return all(c.passed is not False for c in hr_conditions(p, i))
