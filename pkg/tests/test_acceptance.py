"""Exit criteria. Each test prints one ACCEPTANCE line with its verdict.

Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import os
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from cyclo_scan import _backend
from cyclo_scan.bernoulli import Method, irregular_pairs, raw_bernoulli
from cyclo_scan.cohomology import CharPower, balanced_check, local_h_dims, tangent_dim
from cyclo_scan.criterion import hr_all_pass
from cyclo_scan.primes import primes_in_range
from cyclo_scan.scan import ScanConfig, scan
from cyclo_scan.sl2 import closure, pcs_elements, pcs_generators, standard_generators

SCAN_HI = 3500


@contextmanager
def criterion(number, title, capsys):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} FAIL  {title} ({time.perf_counter() - start:.1f}s)")
        raise
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} PASS  {title} ({time.perf_counter() - start:.1f}s)")


def cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "cyclo_scan", *args],
        capture_output=True,
        env={**os.environ, **(env or {})},
        check=False,
    )


@pytest.fixture(scope="module")
def full_scan():
    start = time.perf_counter()
    rep = scan(ScanConfig(5, SCAN_HI, thread_count=1, bernoulli_method=Method.SERIES_INVERSION))
    return rep, time.perf_counter() - start


def test_1_bernoulli_oracle_equivalence(capsys):
    with criterion(1, "recurrence == series == fast for all primes 5..499, < 30 s", capsys):
        start = time.perf_counter()
        for p in primes_in_range(5, 499):
            oracle = raw_bernoulli(p, Method.RECURRENCE_ORACLE)
            assert raw_bernoulli(p, Method.SERIES_INVERSION) == oracle, p
            assert raw_bernoulli(p, Method.FAST_SERIES_INVERSION) == oracle, p
        assert time.perf_counter() - start < 30


EXPECTED = {37: [5], 101: [33], 157: [47, 95]}


def test_2_scan_reproduction(full_scan, capsys):
    rep, elapsed = full_scan
    title = f"scan 5..{SCAN_HI} single-threaded in {elapsed:.1f}s (< 10 min); 37, 101, 157 qualify; 59, 67 do not"
    with criterion(2, title, capsys):
        assert elapsed < 600
        by_p = {r.p: r for r in rep.reports}
        for p, indices in EXPECTED.items():
            assert by_p[p].qualifies and sorted(by_p[p].indices) == indices
            # independent route
            oracle_is = sorted(p - pair.k for pair in irregular_pairs(p, Method.RECURRENCE_ORACLE))
            assert oracle_is == indices
        for p in (59, 67):
            assert by_p[p].irregular_pairs and by_p[p].residue_mod_4 == 3
            assert not by_p[p].qualifies
        assert rep.errors == 0


@pytest.mark.slow
def test_2b_scan_pure_python_fallback(full_scan, capsys):
    with criterion("2b", f"scan 5..{SCAN_HI} with the pure-Python kernels < 10 min, same bytes", capsys):
        start = time.perf_counter()
        slow = cli("scan", "--from", "5", "--to", str(SCAN_HI), env={"CYCLO_SCAN_PURE_PYTHON": "1"})
        assert slow.returncode == 0
        assert time.perf_counter() - start < 600
        fast = cli("scan", "--from", "5", "--to", str(SCAN_HI))
        assert slow.stdout == fast.stdout


def test_3_index_invariants(full_scan, capsys):
    with criterion(3, "reported indices: odd, in [3, p-4], not 1, p-2, (p-1)/2; hr_conditions pass", capsys):
        rep, _ = full_scan
        violations = []
        for r in rep.reports:
            p = r.p
            for i in r.indices:
                if (i % 2 == 0 or not 3 <= i <= p - 4 or i in (1, p - 2, (p - 1) // 2)
                        or not hr_all_pass(p, i)):
                    violations.append((p, i))
        assert violations == []
        assert sum(len(r.indices) for r in rep.reports) > 0


def test_4_cohomology_identities(full_scan, capsys):
    with criterion(4, "Euler characteristic and duality on 10,000 random (p, j); balanced for emitted (p, i)", capsys):
        rng = random.Random(20261015)
        primes = primes_in_range(5, 10**5)
        for _ in range(10_000):
            p = rng.choice(primes)
            j = rng.randrange(-(p - 1), 2 * (p - 1))
            d = local_h_dims(CharPower(p, j))
            assert d.h1 - d.h0 - d.h2 == 1
            assert d.h2 == local_h_dims(CharPower(p, 1 - j)).h0
        rep, _ = full_scan
        emitted = [(r.p, i) for r in rep.reports for i in r.indices]
        assert emitted
        for p, i in emitted:
            assert tangent_dim(p, i) == 2 and balanced_check(p, i)


def test_5_group_orders(capsys):
    with criterion(5, "|SL2(Z/p)| = p(p^2-1) and |PCS mod p^2| = p^3 by closure, p in {5, 7}", capsys):
        for p in (5, 7):
            assert closure(standard_generators(p, 1)).order == p * (p * p - 1)
            pcs = closure(pcs_generators(p, 2))
            assert pcs.order == p**3
            assert pcs.elements == pcs_elements(p, 1, 2).elements


def test_6_lemma34_finite_shadow(capsys):
    with criterion(6, "verify-lemma34 p in {5, 7}, 10 seeded trials each, all pass, < 5 min", capsys):
        start = time.perf_counter()
        import json

        for p in (5, 7):
            res = cli("verify-lemma34", "--p", str(p), "--trials", "10", "--seed", "0")
            assert res.returncode == 0, res.stderr
            doc = json.loads(res.stdout)
            assert doc["trials"] == 10 and doc["all_pass"]
            assert all(r["contains_pcs"] and r["closure_order"] == p**6 for r in doc["results"])
        assert time.perf_counter() - start < 300


def test_7_determinism(capsys):
    with criterion(7, "scan 5..1000 with 1 and 8 threads gives byte-identical JSON", capsys):
        one = cli("scan", "--from", "5", "--to", "1000", "--threads", "1")
        eight = cli("scan", "--from", "5", "--to", "1000", "--threads", "8")
        assert one.returncode == eight.returncode == 0
        assert one.stdout and one.stdout == eight.stdout


def test_backend_reported(capsys):
    with capsys.disabled():
        print(f"\nkernels in use: {_backend.BACKEND}")
