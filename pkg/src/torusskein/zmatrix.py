"""Exact integer matrices, Smith normal form with witnesses, and cokernels.

Entries are Python ints throughout, so there is no overflow for the large
matrices produced by long R/L words.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Optional, Sequence

from .errors import ParseError


@dataclass(frozen=True)
class ZMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ZMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = []
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"non-integer entry {x!r}")
                flat.append(x)
        return cls(len(rows), ncols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ZMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ZMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int, cols: int) -> "ZMatrix":
        out = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(diag):
            out[i][i] = x
        return cls.from_rows(out) if rows else cls(0, cols, ())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "ZMatrix":
        return ZMatrix(self.cols, self.rows,
                       tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __add__(self, other: "ZMatrix") -> "ZMatrix":
        self._check_same_shape(other)
        return ZMatrix(self.rows, self.cols,
                       tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "ZMatrix") -> "ZMatrix":
        self._check_same_shape(other)
        return ZMatrix(self.rows, self.cols,
                       tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "ZMatrix":
        return ZMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scale(self, k: int) -> "ZMatrix":
        return ZMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def __matmul__(self, other: "ZMatrix") -> "ZMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return ZMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def _check_same_shape(self, other: "ZMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.is_square and abs(self.det()) == 1

    def to_json(self) -> list[list[str]]:
        # decimal strings so consumers with 64-bit ints do not truncate
        return [[str(x) for x in r] for r in self.to_rows()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "ZMatrix":
        return cls.from_rows([[int(x) for x in r] for r in data])

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.to_rows()) + "]"


def parse_zmatrix(text: str) -> ZMatrix:
    """Parse a literal like ``[[0,1],[1,0]]`` or ``[[-1]]``."""
    import json

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a matrix literal: {text!r}") from exc
    if (not isinstance(data, list) or not data
            or not all(isinstance(r, list) and r for r in data)):
        raise ParseError(f"not a matrix literal: {text!r}")
    try:
        return ZMatrix.from_rows(data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix literal {text!r}: {exc}") from exc


def kronecker(a: ZMatrix, b: ZMatrix) -> ZMatrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return ZMatrix(a.rows * b.rows, a.cols * b.cols, tuple(x for r in rows for x in r))


@dataclass(frozen=True)
class SmithDecomposition:
    u: ZMatrix
    v: ZMatrix
    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)

    def diagonal(self) -> ZMatrix:
        return ZMatrix.diagonal(self.factors, self.u.rows, self.v.cols)


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Z^free_rank + Z/t1 + ... + Z/tk with t1 | t2 | ... and every ti > 1."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(t <= 1 for t in self.torsion):
            raise ValueError(f"torsion factors must exceed 1: {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion factors must form a divisibility chain: {self.torsion}")

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    def torsion_subgroup(self) -> "AbelianGroupStructure":
        return AbelianGroupStructure(0, self.torsion)

    def with_free(self, extra: int) -> "AbelianGroupStructure":
        return AbelianGroupStructure(self.free_rank + extra, self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _choose_pivot(d: list[list[int]], t: int) -> Optional[tuple[int, int]]:
    # smallest |entry|, then lowest row, then lowest column
    best = None
    for i in range(t, len(d)):
        row = d[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(a: ZMatrix) -> SmithDecomposition:
    """Return unimodular ``u``, ``v`` and invariant factors with ``u @ a @ v`` diagonal.

    The factors are positive and each divides the next; zeros on the
    diagonal are not listed. Pivots are chosen deterministically.
    """
    m, n = a.rows, a.cols
    d = a.to_rows()
    u = ZMatrix.identity(m).to_rows()
    v = ZMatrix.identity(n).to_rows()

    def add_row(dst, src, k):
        # row[dst] += k * row[src]
        for mat in (d, u):
            rd, rs = mat[dst], mat[src]
            for j in range(len(rd)):
                rd[j] += k * rs[j]

    def add_col(dst, src, k):
        for mat in (d, v):
            for r in mat:
                r[dst] += k * r[src]

    def swap_rows(i, j):
        for mat in (d, u):
            mat[i], mat[j] = mat[j], mat[i]

    def swap_cols(i, j):
        for mat in (d, v):
            for r in mat:
                r[i], r[j] = r[j], r[i]

    factors = []
    for t in range(min(m, n)):
        while True:
            pivot = _choose_pivot(d, t)
            if pivot is None:
                break
            i, j = pivot
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
                    dirty |= d[i][t] != 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
                    dirty |= d[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if d[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if d[t][t] == 0:
            break
        if d[t][t] < 0:
            for mat in (d, u):
                mat[t] = [-x for x in mat[t]]
        factors.append(d[t][t])

    return SmithDecomposition(ZMatrix.from_rows(u) if m else ZMatrix(0, 0, ()),
                              ZMatrix.from_rows(v) if n else ZMatrix(0, 0, ()),
                              tuple(factors))


def cokernel(a: ZMatrix) -> AbelianGroupStructure:
    """Cokernel of ``a`` viewed as a map Z^cols -> Z^rows."""
    snf = smith_normal_form(a)
    return AbelianGroupStructure(a.rows - snf.rank, tuple(f for f in snf.factors if f > 1))


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Used to give lattice bases a canonical presentation; zero rows are dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out_row = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(out_row, len(m)) if m[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(m[i][col]), i))
            m[out_row], m[piv] = m[piv], m[out_row]
            done = True
            for i in range(out_row + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // m[out_row][col]
                    m[i] = [x - q * y for x, y in zip(m[i], m[out_row])]
                    done &= m[i][col] == 0
            if done:
                break
        if out_row < len(m) and m[out_row][col]:
            if m[out_row][col] < 0:
                m[out_row] = [-x for x in m[out_row]]
            p = m[out_row][col]
            for i in range(out_row):
                q = m[i][col] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[out_row])]
            out_row += 1
    return [tuple(r) for r in m[:out_row]]


def integer_kernel(a: ZMatrix) -> list[tuple[int, ...]]:
    """Basis of {x in Z^cols : a x = 0}, in Hermite form.

    Integer kernels are always saturated, so this is also a basis of the
    rational kernel intersected with the lattice.
    """
    snf = smith_normal_form(a)
    basis = [snf.v.column(j) for j in range(snf.rank, a.cols)]
    return hermite_rows(basis)


def solve_rational(a: ZMatrix, b: Sequence[int | Fraction]) -> Optional[tuple[Fraction, ...]]:
    """One rational solution of ``a x = b``, free variables set to zero; None if inconsistent."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    m = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(a.to_rows(), b)]
    pivots = []
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                k = m[i][c]
                m[i] = [x - k * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(m[i][-1] != 0 for i in range(r, a.rows)):
        return None
    x = [Fraction(0)] * a.cols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return tuple(x)
