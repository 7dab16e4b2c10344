"""Range scans over primes and deterministic JSON / CSV reports."""

from __future__ import annotations

import csv
import enum
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__
from .bernoulli import Method, bernoulli_mod_p
from .criterion import (
    CERTIFICATION_NOTE,
    DEFAULT_VANDIVER_BOUND,
    PrimeReport,
    VandiverPolicy,
    VandiverStatus,
    scan_prime,
)
from .errors import CycloScanError, InconsistencyError
from .primes import U64_MAX, primes_in_range

TOOL_NAME = "cyclo-scan"
DEFAULT_FROM = 5
DEFAULT_TO = 3500
CSV_HEADER = ["p", "residue_mod_4", "irregular_pairs", "indices", "vandiver", "qualifies"]


class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class ScanConfig:
    lo: int = DEFAULT_FROM
    hi: int = DEFAULT_TO
    vandiver_policy: VandiverPolicy = VandiverPolicy.ASSUME
    bernoulli_method: Method = Method.SERIES_INVERSION
    thread_count: int = 1
    output_format: OutputFormat = OutputFormat.JSON
    seed: int = 0
    qualifying_only: bool = False
    dump_bernoulli: str | None = None
    vandiver_bound: int = DEFAULT_VANDIVER_BOUND

    def __post_init__(self):
        if not 5 <= self.lo <= self.hi:
            raise ValueError(f"need 5 <= from <= to, got {self.lo}..{self.hi}")
        if self.hi > U64_MAX:
            raise ValueError("range must fit in 64 bits")
        if self.thread_count < 1:
            raise ValueError("thread count must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a natural number")
        for name, kind in (("vandiver_policy", VandiverPolicy),
                           ("bernoulli_method", Method),
                           ("output_format", OutputFormat)):
            object.__setattr__(self, name, kind(getattr(self, name)))

    def echo(self) -> dict:
        # thread_count is left out on purpose: output must not depend on it
        return {
            "from": self.lo,
            "to": self.hi,
            "vandiver_policy": self.vandiver_policy.value,
            "vandiver_bound": self.vandiver_bound,
            "bernoulli_method": self.bernoulli_method.value,
            "seed": self.seed,
            "qualifying_only": self.qualifying_only,
        }


@dataclass(frozen=True)
class ScanReport:
    config: ScanConfig
    version: str
    reports: tuple[PrimeReport, ...]
    primes_scanned: int
    irregular: int
    qualifying: int
    errors: int
    bernoulli_lines: tuple[str, ...] = ()

    @property
    def has_inconsistency(self) -> bool:
        return any(r.error and r.error.startswith("InconsistencyError") for r in self.reports)

    def qualifying_primes(self) -> list[int]:
        return [r.p for r in self.reports if r.qualifies]


def _error_report(p, exc):
    return PrimeReport(
        p=p,
        residue_mod_4=p % 4,
        irregular_pairs=(),
        admissible_indices=(),
        vandiver_status=VandiverStatus.NOT_CHECKED,
        qualifies=False,
        error=f"{type(exc).__name__}: {exc}",
    )


def _run_one(p, config):
    try:
        table = bernoulli_mod_p(p, config.bernoulli_method)
        report = scan_prime(p, config.vandiver_policy, bound=config.vandiver_bound, table=table)
    except (CycloScanError, ValueError, ArithmeticError) as exc:
        return _error_report(p, exc), ()
    lines = tuple(table.dump_lines()) if config.dump_bernoulli else ()
    return report, lines


def scan(config: ScanConfig) -> ScanReport:
    primes = primes_in_range(config.lo, config.hi)
    # largest primes first so the slow ones do not trail at the end
    order = sorted(primes, reverse=True)
    results = {}
    if config.thread_count == 1:
        for p in order:
            results[p] = _run_one(p, config)
    else:
        with ThreadPoolExecutor(max_workers=config.thread_count) as pool:
            futures = {p: pool.submit(_run_one, p, config) for p in order}
            for p, fut in futures.items():
                results[p] = fut.result()
    reports = [results[p][0] for p in primes]
    lines = [line for p in primes for line in results[p][1]]
    body = [r for r in reports if r.qualifies] if config.qualifying_only else reports
    return ScanReport(
        config=config,
        version=__version__,
        reports=tuple(body),
        primes_scanned=len(reports),
        irregular=sum(1 for r in reports if r.irregular_pairs),
        qualifying=sum(1 for r in reports if r.qualifies),
        errors=sum(1 for r in reports if r.error),
        bernoulli_lines=tuple(lines),
    )


def prime_entry(r: PrimeReport) -> dict:
    return {
        "p": r.p,
        "residue_mod_4": r.residue_mod_4,
        "irregular_pairs": [pair.k for pair in r.irregular_pairs],
        "index_of_irregularity": len(r.irregular_pairs),
        "admissible_indices": [
            {
                "i": a.i,
                "k": a.source_pair.k,
                "certification": a.certification.value,
                "det_exponent": det,
            }
            for a, det in zip(r.admissible_indices, r.det_exponent)
        ],
        "vandiver": r.vandiver_status.value,
        "qualifies": r.qualifies,
        "error": r.error,
    }


def report_dict(report: ScanReport) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": report.version,
        "config": report.config.echo(),
        "certification_note": CERTIFICATION_NOTE,
        "summary": {
            "primes_scanned": report.primes_scanned,
            "irregular": report.irregular,
            "qualifying": report.qualifying,
            "errors": report.errors,
        },
        "primes": [prime_entry(r) for r in report.reports],
    }


def csv_row(r: PrimeReport) -> list[str]:
    return [
        str(r.p),
        str(r.residue_mod_4),
        ";".join(str(pair.k) for pair in r.irregular_pairs),
        ";".join(str(a.i) for a in r.admissible_indices),
        r.vandiver_status.value,
        "true" if r.qualifies else "false",
    ]


def emit(report: ScanReport, fmt: OutputFormat | str = OutputFormat.JSON) -> bytes:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return (json.dumps(report_dict(report), indent=2, ensure_ascii=True) + "\n").encode()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.reports:
        writer.writerow(csv_row(r))
    return buf.getvalue().encode()


def dump_bernoulli(report: ScanReport, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for line in report.bernoulli_lines:
            fh.write(line + "\n")


__all__ = [
    "InconsistencyError",
    "OutputFormat",
    "ScanConfig",
    "ScanReport",
    "dump_bernoulli",
    "emit",
    "report_dict",
    "scan",
]
