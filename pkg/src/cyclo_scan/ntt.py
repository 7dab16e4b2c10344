"""Number-theoretic transforms and fast convolution mod an arbitrary prime.

Products are computed under three NTT-friendly primes and recombined with
Garner's CRT, which is exact as long as ``length * (p - 1)**2`` stays below the
product of the three primes (about 2**86). Inputs are limited to ``p < 2**32``.
"""

import numpy as np

# (modulus, primitive root, 2-adic order of modulus - 1)
NTT_PRIMES = (
    (998244353, 3, 23),
    (167772161, 3, 25),
    (469762049, 3, 26),
)
MAX_PRIME = 1 << 32
MAX_LENGTH = 1 << 23


def _bit_reverse(n):
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def ntt(a, mod, root, invert=False):
    """In-order radix-2 NTT of an int64 array whose length is a power of two."""
    n = len(a)
    a = np.asarray(a, dtype=np.int64)[_bit_reverse(n)] % mod
    if invert:
        root = pow(root, -1, mod)
    length = 2
    while length <= n:
        half = length // 2
        w_len = pow(root, (mod - 1) // length, mod)
        w = np.empty(half, dtype=np.int64)
        w[0] = 1
        for j in range(1, half):
            w[j] = w[j - 1] * w_len % mod
        blocks = a.reshape(-1, length)
        u = blocks[:, :half].copy()
        v = blocks[:, half:] * w % mod
        blocks[:, :half] = (u + v) % mod
        blocks[:, half:] = (u - v) % mod
        a = blocks.reshape(-1)
        length *= 2
    if invert:
        a = a * pow(n, -1, mod) % mod
    return a


def _conv_single(a, b, size, mod, root):
    fa = np.zeros(size, dtype=np.int64)
    fb = np.zeros(size, dtype=np.int64)
    fa[: len(a)] = a % mod
    fb[: len(b)] = b % mod
    prod = ntt(fa, mod, root) * ntt(fb, mod, root) % mod
    return ntt(prod, mod, root, invert=True)


def convolve_mod(a, b, p, limit=None):
    """Coefficients of a*b mod p, truncated to ``limit`` terms if given."""
    if p >= MAX_PRIME:
        raise ValueError("fast convolution supports p < 2**32 only")
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    full = len(a) + len(b) - 1
    size = 1
    while size < full:
        size *= 2
    if size > MAX_LENGTH:
        raise ValueError("convolution too long for the NTT primes")
    (m1, g1, _), (m2, g2, _), (m3, g3, _) = NTT_PRIMES
    r1 = _conv_single(a, b, size, m1, g1)
    r2 = _conv_single(a, b, size, m2, g2)
    r3 = _conv_single(a, b, size, m3, g3)
    # Garner: x = r1 + m1*k2 + m1*m2*k3
    k2 = (r2 - r1) % m2 * pow(m1, -1, m2) % m2
    t = ((r3 - r1) % m3 - (m1 % m3) * k2 % m3) % m3
    k3 = t * pow(m1 * m2 % m3, -1, m3) % m3
    x = (r1 % p + (m1 % p) * k2 % p + (m1 * m2 % p) * k3 % p) % p
    end = full if limit is None else min(limit, full)
    out = np.zeros(end if limit is None else limit, dtype=np.int64)
    out[:end] = x[:end]
    return out


def newton_inverse(coeffs, p):
    """Inverse of a power series mod (x**len(coeffs), p) by Newton iteration."""
    n_terms = len(coeffs)
    s = np.asarray(coeffs, dtype=np.int64)
    t = np.array([pow(int(s[0]), -1, p)], dtype=np.int64)
    k = 1
    while k < n_terms:
        k = min(2 * k, n_terms)
        e = (-convolve_mod(s[:k], t, p, limit=k)) % p
        e[0] = (e[0] + 2) % p
        t = convolve_mod(t, e, p, limit=k)
    return [int(v) for v in t]
