"""Slow but independent reference computations.

Nothing here imports the code paths it is used to check: determinants are
cofactor expansions, invariant factors come from gcds of minors, and
conjugacy is decided by exhaustive search over short words.
"""
from functools import reduce
from itertools import combinations, product
from math import gcd

import numpy as np


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def matmul(a, b):
    return [[sum(x * y for x, y in zip(r, c)) for c in zip(*b)] for r in a]


def determinantal_factors(rows):
    """Invariant factors as ratios of successive gcds of k x k minors."""
    m, n = len(rows), len(rows[0])
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, cofactor_det([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        divisors.append(g)
    return tuple(b // a for a, b in zip(divisors, divisors[1:]))


def rl_word_matrix(exps):
    """Positive R/L word as nested lists, from scratch."""
    g = [[1, 0], [0, 1]]
    for i, e in enumerate(exps):
        letter = [[1, 1], [0, 1]] if i % 2 == 0 else [[1, 0], [1, 1]]
        for _ in range(e):
            g = matmul(g, letter)
    return g


def binary_necklaces(m):
    """Number of binary necklaces of length m, by enumerating and deduping rotations."""
    seen = set()
    for bits in product((0, 1), repeat=m):
        seen.add(min(bits[i:] + bits[:i] for i in range(m)))
    return len(seen)


def rl_necklace_words(m):
    """Cyclic R/L words with m letters using both letters, as exponent tuples up to rotation."""
    out = set()
    for bits in product((0, 1), repeat=m):
        if 0 < sum(bits) < m:
            out.add(min(bits[i:] + bits[:i] for i in range(m)))
    return out


_S = ((0, -1), (1, 0))
_T = ((1, 1), (0, 1))
_TI = ((1, -1), (0, 1))


def _mul(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))


def short_words(max_len=12):
    """All distinct products of at most max_len letters from S, T, T^-1, up to sign.

    Returned as an (N, 4) int64 array of rows (a, b, c, d).
    """
    ident = ((1, 0), (0, 1))

    def key(m):
        flat = (m[0][0], m[0][1], m[1][0], m[1][1])
        neg = tuple(-x for x in flat)
        return max(flat, neg)

    seen = {key(ident)}
    frontier = [ident]
    for _ in range(max_len):
        nxt = []
        for m in frontier:
            for g in (_S, _T, _TI):
                p = _mul(m, g)
                k = key(p)
                if k not in seen:
                    seen.add(k)
                    nxt.append(p)
        frontier = nxt
    return np.array(sorted(seen), dtype=np.int64)


def find_conjugator(words, g, h):
    """Index of some H in ``words`` with H g H^-1 = h, or None."""
    a, b, c, d = (words[:, i] for i in range(4))
    (g00, g01), (g10, g11) = g
    # H g
    x00 = a * g00 + b * g10
    x01 = a * g01 + b * g11
    x10 = c * g00 + d * g10
    x11 = c * g01 + d * g11
    # (H g) H^-1, H^-1 = [[d, -b], [-c, a]]
    y00 = x00 * d - x01 * c
    y01 = -x00 * b + x01 * a
    y10 = x10 * d - x11 * c
    y11 = -x10 * b + x11 * a
    (h00, h01), (h10, h11) = h
    hit = (y00 == h00) & (y01 == h01) & (y10 == h10) & (y11 == h11)
    idx = np.flatnonzero(hit)
    return int(idx[0]) if idx.size else None


def lcm_list(xs):
    return reduce(lambda x, y: x * y // gcd(x, y), xs, 1)
