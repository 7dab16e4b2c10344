"""Pure-Python kernels. Reference behaviour for the compiled ``_ckernels`` module."""

from collections import deque
from itertools import islice
from operator import mul


def series_inverse(coeffs, p):
    """Quadratic-time inverse of a power series mod (x**len(coeffs), p)."""
    n_terms = len(coeffs)
    inv0 = pow(coeffs[0], -1, p)
    neg_inv0 = p - inv0
    tail = coeffs[1:]
    out = [inv0]
    for n in range(1, n_terms):
        acc = sum(map(mul, islice(tail, 0, n), reversed(out)))
        out.append(acc % p * neg_inv0 % p)
    return out


def bernoulli_recurrence(p, nmax):
    """B_0..B_nmax mod p from sum_{j<=n} C(n+1, j) B_j = 0; needs nmax + 1 < p."""
    b = [1]
    row = [1, 1]  # C(1, *)
    for n in range(1, nmax + 1):
        row = [1, *[(x + y) % p for x, y in zip(row, row[1:])], 1]  # C(n+1, *)
        acc = sum(map(mul, row, b)) % p
        b.append((p - acc) * pow(n + 1, -1, p) % p)
    return b


def _mat_mul(x, y, q):
    xa, xb, xc, xd = x
    ya, yb, yc, yd = y
    return (
        (xa * ya + xb * yc) % q,
        (xa * yb + xb * yd) % q,
        (xc * ya + xd * yc) % q,
        (xc * yb + xd * yd) % q,
    )


def closure_keys(gens, q, budget):
    """Keys of the subgroup of SL2(Z/q) generated by ``gens`` (4-tuples).

    Returns None if the group would exceed ``budget`` elements.
    """
    q2 = q * q
    q3 = q2 * q
    ident = (1 % q, 0, 0, 1 % q)
    seen = {ident[0] * q3 + ident[3]}
    frontier = deque([ident])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = _mat_mul(x, g, q)
            key = y[0] * q3 + y[1] * q2 + y[2] * q + y[3]
            if key not in seen:
                seen.add(key)
                if len(seen) > budget:
                    return None
                frontier.append(y)
    return seen
