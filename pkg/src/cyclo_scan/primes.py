"""Deterministic primality for 64-bit integers and a segmented range sieve."""

from math import isqrt

# Bases that make Miller-Rabin deterministic for every n < 3.3e24 (covers 2**64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

U64_MAX = (1 << 64) - 1
_SIEVE_BASE_LIMIT = 10**7


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_in_range(lo: int, hi: int, segment: int = 1 << 18) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    if hi < 2 or hi < lo:
        return []
    if hi > U64_MAX:
        raise OverflowError("scan range exceeds 64 bits")
    lo = max(lo, 2)
    if isqrt(hi) > _SIEVE_BASE_LIMIT:
        # base primes would not fit in memory; test candidates individually
        return [n for n in range(lo, hi + 1) if is_prime(n)]
    base = _small_primes(isqrt(hi))
    out = []
    start = lo
    while start <= hi:
        stop = min(start + segment - 1, hi)
        seg = bytearray([1]) * (stop - start + 1)
        for q in base:
            first = max(q * q, (start + q - 1) // q * q)
            if first > stop:
                continue
            seg[first - start :: q] = bytes(len(range(first, stop + 1, q)))
        out.extend(start + i for i, flag in enumerate(seg) if flag)
        start = stop + 1
    return out
