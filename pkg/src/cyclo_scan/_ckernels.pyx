# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

# Moduli must fit in 63 bits so that a + b never wraps.
MAX_MODULUS = (1 << 63) - 1
# Closure keys pack four residues into 64 bits.
MAX_CLOSURE_MODULUS = 1 << 16


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t p) noexcept nogil:
    return <uint64_t>((<u128>a * b) % p)


cdef uint64_t _dot(const uint64_t* a, const uint64_t* rev, Py_ssize_t n,
                   uint64_t p, bint small) noexcept nogil:
    # small: p < 2**32, so each product < 2**64 and n < 2**32 terms fit in 128 bits
    cdef u128 acc = 0
    cdef uint64_t r = 0
    cdef Py_ssize_t j
    if small:
        for j in range(n):
            acc += <u128>a[j] * rev[j]
        return <uint64_t>(acc % p)
    for j in range(n):
        r += _mulmod(a[j], rev[j], p)
        if r >= p:
            r -= p
    return r


cdef uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p) noexcept nogil:
    cdef uint64_t r = 1 % p
    a %= p
    while e:
        if e & 1:
            r = _mulmod(r, a, p)
        a = _mulmod(a, a, p)
        e >>= 1
    return r


def series_inverse(coeffs, p):
    cdef Py_ssize_t n_terms = len(coeffs)
    cdef uint64_t mod = p
    cdef bint small = p < (1 << 32)
    cdef uint64_t* s = <uint64_t*>malloc(n_terms * sizeof(uint64_t))
    # t is stored reversed from the top so that t[n-1..0] is contiguous
    cdef uint64_t* trev = <uint64_t*>malloc(n_terms * sizeof(uint64_t))
    cdef Py_ssize_t n, top = n_terms - 1
    cdef uint64_t neg_inv0, acc
    if s == NULL or trev == NULL:
        free(s)
        free(trev)
        raise MemoryError()
    try:
        for n in range(n_terms):
            s[n] = coeffs[n]
        neg_inv0 = mod - <uint64_t>pow(coeffs[0], -1, p)
        with nogil:
            trev[top] = mod - neg_inv0
            for n in range(1, n_terms):
                acc = _dot(s + 1, trev + top - n + 1, n, mod, small)
                trev[top - n] = _mulmod(acc, neg_inv0, mod)
        return [trev[top - n] for n in range(n_terms)]
    finally:
        free(s)
        free(trev)


def bernoulli_recurrence(p, Py_ssize_t nmax):
    cdef uint64_t mod = p
    cdef bint small = p < (1 << 32)
    cdef uint64_t* b = <uint64_t*>malloc((nmax + 1) * sizeof(uint64_t))
    cdef uint64_t* row = <uint64_t*>malloc((nmax + 2) * sizeof(uint64_t))
    cdef Py_ssize_t n, j
    cdef uint64_t acc, x
    if b == NULL or row == NULL:
        free(b)
        free(row)
        raise MemoryError()
    try:
        with nogil:
            b[0] = 1 % mod
            row[0] = 1
            row[1] = 1
            for n in range(1, nmax + 1):
                # row C(n, *) -> C(n+1, *) in place, right to left
                row[n + 1] = 1
                for j in range(n, 0, -1):
                    x = row[j] + row[j - 1]
                    row[j] = x - mod if x >= mod else x
                acc = _dot(row, b, n, mod, small)
                b[n] = _mulmod((mod - acc) % mod, _powmod(n + 1, mod - 2, mod), mod)
        return [b[n] for n in range(nmax + 1)]
    finally:
        free(b)
        free(row)


cdef inline uint64_t _pack(uint64_t a, uint64_t b, uint64_t c, uint64_t d,
                           uint64_t q) noexcept nogil:
    return ((a * q + b) * q + c) * q + d


def closure_keys(gens, q, budget):
    cdef uint64_t mq = q
    cdef Py_ssize_t lim = budget
    cdef Py_ssize_t ng = len(gens), gi, head = 0
    cdef vector[uint64_t] g
    cdef vector[uint64_t] queue
    cdef unordered_set[uint64_t] seen
    cdef uint64_t xa, xb, xc, xd, ya, yb, yc, yd, key
    cdef bint overflow = False
    for gen in gens:
        for e in gen:
            g.push_back(e)
    key = _pack(1 % mq, 0, 0, 1 % mq, mq)
    seen.insert(key)
    queue.push_back(1 % mq)
    queue.push_back(0)
    queue.push_back(0)
    queue.push_back(1 % mq)
    with nogil:
        while head < <Py_ssize_t>queue.size() and not overflow:
            xa = queue[head]
            xb = queue[head + 1]
            xc = queue[head + 2]
            xd = queue[head + 3]
            head += 4
            for gi in range(ng):
                ya = (xa * g[4 * gi] + xb * g[4 * gi + 2]) % mq
                yb = (xa * g[4 * gi + 1] + xb * g[4 * gi + 3]) % mq
                yc = (xc * g[4 * gi] + xd * g[4 * gi + 2]) % mq
                yd = (xc * g[4 * gi + 1] + xd * g[4 * gi + 3]) % mq
                key = _pack(ya, yb, yc, yd, mq)
                if seen.insert(key).second:
                    if <Py_ssize_t>seen.size() > lim:
                        overflow = True
                        break
                    queue.push_back(ya)
                    queue.push_back(yb)
                    queue.push_back(yc)
                    queue.push_back(yd)
    if overflow:
        return None
    return set(seen)
