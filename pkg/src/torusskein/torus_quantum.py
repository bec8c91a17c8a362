"""Lattice bookkeeping for the quantum torus on Lambda^2 = Lambda + Lambda.

Basis elements m_x are indexed by lattice vectors x, with product
m_x m_y = q^{w(x,y)/2} m_{x+y}. Powers of q are kept as exact rationals and
never evaluated, so distinct exponents stay independent as for generic q.

For Lambda = Z^r the coordinates are laid out as (first Lambda factor,
second Lambda factor), and w pairs coordinate i of the first factor with
coordinate i of the second:

    w(x, y) = sum_i x_i y_{r+i} - x_{r+i} y_i

which for r = 1 is the determinant ad - bc. This block layout matches
``kronecker(g, weyl)`` for g acting across the two factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError
from .zmatrix import ZMatrix, integer_kernel, solve_rational

LatticeVector = tuple[int, ...]
QExponent = Fraction


def omega(x: Sequence, y: Sequence):
    """The standard symplectic pairing; accepts ints or Fractions."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch {len(x)} vs {len(y)}")
    if len(x) % 2:
        raise ValueError("lattice vectors have even length")
    r = len(x) // 2
    return sum(x[i] * y[r + i] - x[r + i] * y[i] for i in range(r))


def omega_matrix(n: int) -> ZMatrix:
    """Gram matrix W with omega(x, y) = x^T W y."""
    r = n // 2
    rows = [[0] * n for _ in range(n)]
    for i in range(r):
        rows[i][r + i] = 1
        rows[r + i][i] = -1
    return ZMatrix.from_rows(rows)


def preserves_omega(p: ZMatrix) -> bool:
    w = omega_matrix(p.rows)
    return p.transpose() @ w @ p == w


def _vadd(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


@dataclass(frozen=True)
class LatticeSubspace:
    """Saturated sublattice given by a basis in Hermite form."""

    basis: tuple[LatticeVector, ...]
    ambient: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, x: Sequence[int]) -> bool:
        if not self.basis:
            return all(c == 0 for c in x)
        m = ZMatrix.from_rows(self.basis).transpose()
        sol = solve_rational(m, x)
        # saturated, so a rational solution is automatically integral
        return sol is not None


def _difference(p: ZMatrix) -> ZMatrix:
    if not p.is_square:
        raise ValueError("twisting matrix must be square")
    return ZMatrix.identity(p.rows) - p


def kernel_K(p: ZMatrix) -> LatticeSubspace:
    """K = ker(I - p), the p-fixed sublattice."""
    return LatticeSubspace(tuple(integer_kernel(_difference(p))), p.rows)


def k_perp(p: ZMatrix) -> LatticeSubspace:
    """{x : w(x, k) = 0 for all k in K}."""
    k = kernel_K(p)
    n = p.rows
    if not k.basis:
        return LatticeSubspace(tuple(ZMatrix.identity(n).row(i) for i in range(n)), n)
    w = omega_matrix(n)
    # w(x, k) = x . (W k)
    constraints = ZMatrix.from_rows([w.apply(v) for v in k.basis])
    return LatticeSubspace(tuple(integer_kernel(constraints)), n)


def in_k_perp(x: Sequence[int], p: ZMatrix) -> bool:
    return all(omega(x, k) == 0 for k in kernel_K(p).basis)


def quantum_product(x: Sequence[int], y: Sequence[int]) -> tuple[QExponent, LatticeVector]:
    """m_x m_y = q^e m_{x+y}; returns (e, x+y)."""
    return Fraction(omega(x, y), 2), _vadd(x, y)


@dataclass(frozen=True)
class TwistedCommutator:
    """[m_x, m_y]_p = q^{e1} m_{i1} - q^{e2} m_{i2}."""

    exp1: QExponent
    index1: LatticeVector
    exp2: QExponent
    index2: LatticeVector

    def is_zero(self) -> bool:
        return self.exp1 == self.exp2 and self.index1 == self.index2

    def __str__(self) -> str:
        def idx(v):
            return "(" + ",".join(str(c) for c in v) + ")"
        return f"q^{{{self.exp1}}} m_{{{idx(self.index1)}}} - q^{{{self.exp2}}} m_{{{idx(self.index2)}}}"


def twisted_commutator(x: Sequence[int], y: Sequence[int], p: ZMatrix) -> TwistedCommutator:
    """m_x m_y - m_y p(m_x) = q^{w(x,y)/2} m_{x+y} - q^{w(y,px)/2} m_{y+px}."""
    if not (len(x) == len(y) == p.rows == p.cols):
        raise ValueError("dimension mismatch")
    px = p.apply(x)
    e1, i1 = quantum_product(x, y)
    e2, i2 = quantum_product(y, px)
    return TwistedCommutator(e1, i1, e2, i2)


def difference_preimage(x: Sequence[int], p: ZMatrix) -> tuple[Fraction, ...]:
    """A rational v with (I - p) v = x, free coordinates set to 0."""
    v = solve_rational(_difference(p), x)
    if v is None:
        raise DomainError(f"{tuple(x)} is not in the rational image of I - p")
    return v


def renorm_exponent(x: Sequence[int], p: ZMatrix) -> QExponent:
    """f(x) = -w((I - p)^{-1} x, x) / 2 for x in K-perp.

    Rescaling m_x -> q^{-f(x)} m_x puts every twisted commutator in the form
    (+-) (m'_{x+y} - m'_{px+y}). The value does not depend on which
    preimage is used, since preimages differ by elements of K.
    """
    if not in_k_perp(x, p):
        raise DomainError(f"{tuple(x)} is not orthogonal to the fixed lattice")
    v = difference_preimage(x, p)
    return -Fraction(omega(v, x)) / 2


def verify_renorm_constraint(x: Sequence[int], y: Sequence[int], p: ZMatrix) -> bool:
    """Check f(x + y) - f(px + y) == w(y, px)/2 - w(x, y)/2 exactly."""
    px = p.apply(x)
    for v in (x, y, _vadd(x, y), _vadd(px, y)):
        if not in_k_perp(v, p):
            raise DomainError(f"{tuple(v)} is not orthogonal to the fixed lattice")
    lhs = renorm_exponent(_vadd(x, y), p) - renorm_exponent(_vadd(px, y), p)
    rhs = Fraction(omega(y, px), 2) - Fraction(omega(x, y), 2)
    return lhs == rhs


def vanishing_witness(x: Sequence[int], p: ZMatrix) -> Optional[LatticeVector]:
    """Some y with p y = y and w(x, y) != 0, or None when x is in K-perp.

    Such a y gives [m_y, m_{-y} m_x]_p = (1 - q^{w(x,y)}) m_x, so m_x dies
    in the coinvariants.
    """
    if len(x) != p.rows:
        raise ValueError("dimension mismatch")
    for k in kernel_K(p).basis:
        if omega(x, k) != 0:
            return k
    return None
