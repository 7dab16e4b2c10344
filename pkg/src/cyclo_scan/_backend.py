"""Kernel selection at import time.

The compiled extension is used when it imports; set ``CYCLO_SCAN_PURE_PYTHON=1``
to force the pure-Python kernels.
"""

import os

from . import _pykernels

try:
    if os.environ.get("CYCLO_SCAN_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as kernels

    COMPILED = True
except ImportError:
    kernels = _pykernels
    COMPILED = False

BACKEND = "cython" if COMPILED else "python"

# Limits of the compiled kernels; beyond them the pure-Python kernels are used.
_C_MAX_MODULUS = (1 << 63) - 1
_C_MAX_CLOSURE_MODULUS = 1 << 16


def series_inverse(coeffs, p):
    if COMPILED and p <= _C_MAX_MODULUS:
        return kernels.series_inverse(coeffs, p)
    return _pykernels.series_inverse(coeffs, p)


def bernoulli_recurrence(p, nmax):
    if COMPILED and p <= _C_MAX_MODULUS:
        return kernels.bernoulli_recurrence(p, nmax)
    return _pykernels.bernoulli_recurrence(p, nmax)


def closure_keys(gens, q, budget):
    if COMPILED and q <= _C_MAX_CLOSURE_MODULUS:
        return kernels.closure_keys(gens, q, budget)
    return _pykernels.closure_keys(gens, q, budget)
