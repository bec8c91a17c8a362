"""Dimensions of twisted HH_0 of the quantum torus and of GL1 skein modules.

For a twisting matrix p acting on the lattice, HH_0(A, A_p) has a basis
indexed by the torsion of coker(I - p), so its dimension is the product of
the invariant factors of I - p.

For SL2 the Weyl group {+1, -1} acts on Lambda = Z, giving one summand for
p = g and one for p = -g. These are reported separately; how they assemble
into the full SL2 skein module is not computed here, and their sum is not
the skein module dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import ConsistencyError, DomainError
from .mapping_torus import h1
from .sl2 import Mat2, Shear, classify
from .zmatrix import AbelianGroupStructure, ZMatrix, cokernel, kronecker, smith_normal_form


@dataclass(frozen=True)
class HH0Dimension:
    dimension: int
    invariant_factors: tuple[int, ...]
    torsion_group: AbelianGroupStructure

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def __post_init__(self):
        if self.dimension != prod(self.invariant_factors):
            raise ConsistencyError("dimension is not the product of the invariant factors")
        if self.torsion_group.torsion_order != self.dimension:
            raise ConsistencyError("torsion order disagrees with the invariant factors")

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "invariant_factors": list(self.invariant_factors),
            "rank": self.rank,
            "torsion": str(self.torsion_group),
        }


def hh0_dim(p: ZMatrix) -> HH0Dimension:
    if not p.is_square:
        raise DomainError("twisting matrix must be square")
    diff = ZMatrix.identity(p.rows) - p
    factors = smith_normal_form(diff).factors
    return HH0Dimension(prod(factors), factors, cokernel(diff).torsion_subgroup())


@dataclass(frozen=True)
class GL1Routes:
    formula: int
    hochschild: int
    homology: int

    def agree(self) -> bool:
        return self.formula == self.hochschild == self.homology


def gl1_formula(g: Mat2) -> int:
    """1 for I, |n| for T^n (n != 0), |tr g - 2| otherwise."""
    c = classify(g)
    if isinstance(c, Shear) and c.sign > 0:
        return 1 if c.n == 0 else abs(c.n)
    return abs(g.trace - 2)


def gl1_routes(g: Mat2) -> GL1Routes:
    return GL1Routes(gl1_formula(g), hh0_dim(g.to_zmatrix()).dimension, h1(g).torsion_order)


def gl1_skein_dim(g: Mat2) -> int:
    """GL1 skein module dimension of M_g at generic q.

    Computed three ways (closed formula, invariant factors of I - g, torsion
    of H1(M_g)); any disagreement raises ConsistencyError.
    """
    routes = gl1_routes(g)
    if not routes.agree():
        raise ConsistencyError(f"GL1 dimension routes disagree for {g}: {routes}")
    return routes.formula


@dataclass(frozen=True)
class SL2Summands:
    """Twisted HH_0 summands for the two Weyl elements (p = g and p = -g)."""

    plus: HH0Dimension
    minus: HH0Dimension


def sl2_summand_dims(g: Mat2) -> SL2Summands:
    return SL2Summands(hh0_dim(g.to_zmatrix()), hh0_dim((-g).to_zmatrix()))


def hh0_dim_general(g: Mat2, weyl: ZMatrix) -> HH0Dimension:
    """hh0_dim of g (x) weyl on Lambda^2 with Lambda = Z^r.

    The Kronecker realization is a convention; it is forced only for r = 1.
    """
    if not weyl.is_unimodular():
        raise DomainError(f"Weyl matrix {weyl} is not unimodular")
    return hh0_dim(kronecker(g.to_zmatrix(), weyl))
