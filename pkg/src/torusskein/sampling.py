"""Seeded random inputs for the self-checks in ``verify`` and the test suite."""
from __future__ import annotations

import random
from typing import Sequence

from .sl2 import (CyclicRLWord, ConjClass, I2, L, Mat2, S, T, class_to_matrix,
                  enumerate_classes)
from .torus_quantum import k_perp
from .zmatrix import ZMatrix

CONJUGATOR_LETTERS = (S, T, T.inverse(), L, L.inverse())


def random_sl2(rng: random.Random, max_len: int = 12) -> Mat2:
    """Product of up to ``max_len`` letters from S, T^+-1, L^+-1."""
    g = I2
    for _ in range(rng.randint(0, max_len)):
        g = g @ rng.choice(CONJUGATOR_LETTERS)
    return g


def random_class(rng: random.Random, trace_bound: int = 10, word_bound: int = 8) -> ConjClass:
    return rng.choice(enumerate_classes(trace_bound, word_bound))


def random_rl_exponents(rng: random.Random, max_pairs: int = 4, max_exp: int = 5) -> tuple[int, ...]:
    n = rng.randint(1, max_pairs)
    return tuple(rng.randint(1, max_exp) for _ in range(2 * n))


def rotate_pairs(exps: Sequence[int], r: int) -> tuple[int, ...]:
    k = (2 * r) % len(exps)
    return tuple(exps[k:]) + tuple(exps[:k])


def rl_matrix(exps: Sequence[int]) -> Mat2:
    g = I2
    for i, e in enumerate(exps):
        g = g @ (T if i % 2 == 0 else L) ** e
    return g


def random_twisting(rng: random.Random) -> Mat2:
    """+-g for g drawn from elliptic, shear and hyperbolic classes alike, then conjugated."""
    kind = rng.choice(("elliptic", "shear", "hyperbolic"))
    if kind == "elliptic":
        c = random_class(rng, 0, 0)
        g = class_to_matrix(c)
    elif kind == "shear":
        g = T ** rng.randint(-6, 6)
    else:
        g = CyclicRLWord.canonical(random_rl_exponents(rng, 2, 3)).matrix()
    if rng.random() < 0.5:
        g = -g
    return g.conj(random_sl2(rng, 4))


def random_in_sublattice(rng: random.Random, basis: Sequence[Sequence[int]], n: int,
                         bound: int = 6) -> tuple[int, ...]:
    v = [0] * n
    for b in basis:
        c = rng.randint(-bound, bound)
        v = [x + c * y for x, y in zip(v, b)]
    return tuple(v)


def random_admissible_pair(rng: random.Random, p: ZMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    basis = k_perp(p).basis
    return (random_in_sublattice(rng, basis, p.rows), random_in_sublattice(rng, basis, p.rows))


def random_zmatrix(rng: random.Random, rows: int, cols: int, bound: int = 50) -> ZMatrix:
    return ZMatrix(rows, cols, tuple(rng.randint(-bound, bound) for _ in range(rows * cols)))
