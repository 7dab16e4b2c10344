"""``cyclo-scan`` command line.

Exit codes: 0 success, 1 configuration error or failed check, 2 internal
inconsistency, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, _backend
from .bernoulli import Method
from .cohomology import ad0_h0, balanced_check, balanced_ledger, tangent_dim
from .criterion import VandiverPolicy
from .errors import CycloScanError, ElementBudgetError, InconsistencyError
from .fp import prime_field
from .scan import DEFAULT_FROM, DEFAULT_TO, OutputFormat, ScanConfig, dump_bernoulli, emit, scan
from .sl2 import lemma34_finite_check

EXIT_OK, EXIT_CONFIG, EXIT_INTERNAL, EXIT_IO = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclo-scan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} ({_backend.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("scan", help="scan a prime range")
    s.add_argument("--from", dest="lo", type=int, default=DEFAULT_FROM)
    s.add_argument("--to", dest="hi", type=int, default=DEFAULT_TO)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")
    s.add_argument("--qualifying-only", action="store_true")
    s.add_argument("--vandiver", choices=[v.value for v in VandiverPolicy], default="assume")
    s.add_argument("--vandiver-bound", type=int, default=None,
                   help="primes below this are covered by published Vandiver checks")
    s.add_argument("--bernoulli", choices=[m.value for m in Method], default="series")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--dump-bernoulli", metavar="PATH")
    s.add_argument("-o", "--output", metavar="PATH", help="write the report here instead of stdout")

    b = sub.add_parser("verify-balanced", help="local dimension check for chi^i at p")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--i", type=int, required=True)

    lm = sub.add_parser("verify-lemma34", help="level 2 -> 3 congruence-subgroup lifting check")
    lm.add_argument("--p", type=int, required=True)
    lm.add_argument("--trials", type=int, default=10)
    lm.add_argument("--seed", type=int, default=0)
    return parser


def _write(data: bytes, path=None):
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _print_json(obj):
    _write((json.dumps(obj, indent=2) + "\n").encode())


def _fail(msg, code):
    print(f"cyclo-scan: {msg}", file=sys.stderr)
    return code


def cmd_scan(args) -> int:
    kwargs = {}
    if args.vandiver_bound is not None:
        kwargs["vandiver_bound"] = args.vandiver_bound
    try:
        config = ScanConfig(
            lo=args.lo, hi=args.hi, vandiver_policy=args.vandiver,
            bernoulli_method=args.bernoulli, thread_count=args.threads,
            output_format=args.format, seed=args.seed,
            qualifying_only=args.qualifying_only, dump_bernoulli=args.dump_bernoulli,
            **kwargs,
        )
    except ValueError as exc:
        return _fail(str(exc), EXIT_CONFIG)
    report = scan(config)
    try:
        _write(emit(report, config.output_format), args.output)
        if config.dump_bernoulli:
            dump_bernoulli(report, config.dump_bernoulli)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    return EXIT_INTERNAL if report.has_inconsistency else EXIT_OK


def cmd_verify_balanced(args) -> int:
    p, i = args.p, args.i
    try:
        if p < 5:
            raise ValueError(f"need p >= 5, got {p}")
        prime_field(p)
        ledger = balanced_ledger(p, i)
        h0_ad, tdim, ok = ad0_h0(p, i), tangent_dim(p, i), balanced_check(p, i)
    except (CycloScanError, ValueError) as exc:
        return _fail(str(exc), EXIT_CONFIG)
    degenerate = i % (p - 1) == 0
    flags = []
    if i % 2 == 0:
        flags.append("even_index_not_admissible")
    if not 2 <= i <= p - 3:
        flags.append("outside_scan_range")
    if degenerate:
        flags.append("degenerate_exponent")
    euler_ok = all(r["h1"] == r["h0"] + r["h2"] + 1 for r in ledger.values())
    _print_json({
        "p": p,
        "i": i,
        "dims": ledger,
        "ad0_h0": h0_ad,
        "tangent_dim": tdim,
        "euler_characteristic_ok": euler_ok,
        "balanced": ok,
        "flags": flags,
        "status": "pass" if ok else "fail",
    })
    return EXIT_OK if ok else EXIT_CONFIG


def cmd_verify_lemma34(args) -> int:
    try:
        verdict = lemma34_finite_check(args.p, args.trials, args.seed)
    except ElementBudgetError as exc:
        return _fail(str(exc), EXIT_CONFIG)
    except (CycloScanError, ValueError) as exc:
        return _fail(str(exc), EXIT_CONFIG)
    _print_json(verdict.to_dict())
    return EXIT_OK if verdict.all_pass else EXIT_INTERNAL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "scan": cmd_scan,
        "verify-balanced": cmd_verify_balanced,
        "verify-lemma34": cmd_verify_lemma34,
    }
    try:
        return handlers[args.command](args)
    except InconsistencyError as exc:
        return _fail(f"internal inconsistency: {exc}", EXIT_INTERNAL)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)


if __name__ == "__main__":
    sys.exit(main())
