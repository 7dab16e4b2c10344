"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from cyclo_scan import _backend, _pykernels, ntt
from cyclo_scan.fp import factorial_ints
from cyclo_scan.sl2 import pcs_generators, random_lift


def exp_series(p):
    _, finv = factorial_ints(p, p - 2)
    return finv[1 : p - 1]


def cases():
    lifts = [random_lift(g, random.Random(0)).entries for g in pcs_generators(7)]
    out = []
    for p in (1009, 3499):
        s = exp_series(p)
        out.append((f"series_inverse p={p}", lambda k, s=s, p=p: k.series_inverse(s, p)))
        out.append((f"bernoulli_recurrence p={p}", lambda k, p=p: k.bernoulli_recurrence(p, p - 3)))
    out.append(("closure_keys level 3, p=7 (117649 elts)",
                lambda k: k.closure_keys(lifts, 343, 10**7)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)]
    if _backend.COMPILED:
        backends.append(("cython", _backend.kernels))
    else:
        print("compiled kernels not built; timing the pure-Python path only")
    print(f"{'kernel':45s} " + " ".join(f"{name:>10s}" for name, _ in backends) + "   speedup")
    for label, fn in cases():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        speedup = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:45s} " + " ".join(f"{t * 1e3:8.1f}ms" for t in times) + f"  {speedup}")
    s = exp_series(3499)
    t = min(timeit.repeat(lambda: ntt.newton_inverse(s, 3499), number=1, repeat=args.repeat))
    print(f"{'newton_inverse (numpy NTT) p=3499':45s} {t * 1e3:8.1f}ms")


if __name__ == "__main__":
    main()
