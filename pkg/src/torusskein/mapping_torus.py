"""Invariants of the mapping torus M_g = T^2 x I / (a, 0) ~ (g(a), 1)."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .sl2 import ConjClass, Elliptic, Hyperbolic, Mat2, Shear
from .zmatrix import AbelianGroupStructure, ZMatrix, cokernel


@dataclass(frozen=True)
class H1Result:
    group: AbelianGroupStructure

    def __post_init__(self):
        if self.group.free_rank < 1:
            raise ValueError("H1 of a mapping torus always has a Z summand")

    @property
    def torsion_order(self) -> int:
        return self.group.torsion_order

    def __str__(self) -> str:
        return str(self.group)


def h1(g: Mat2) -> H1Result:
    """H1(M_g) = coker(I - g) + Z."""
    return H1Result(cokernel(ZMatrix.identity(2) - g.to_zmatrix()).with_free(1))


class GeometryType(enum.Enum):
    SEIFERT = "Seifert"
    SOLV = "Solv"

    def __str__(self) -> str:
        return self.value


def geometry_type(c: ConjClass) -> GeometryType:
    return GeometryType.SOLV if isinstance(c, Hyperbolic) else GeometryType.SEIFERT


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants ``{e; (base, genus); (alpha1, beta1), ...}``.

    ``known=False`` means no description is recorded for the class; all
    other fields are then None.
    """

    known: bool
    euler_like: Optional[int] = None
    base: Optional[str] = None          # "o1" or "n2"
    genus: Optional[int] = None
    exceptional_fibers: Optional[tuple[tuple[int, int], ...]] = field(default=None)

    def __post_init__(self):
        fields = (self.euler_like, self.base, self.genus, self.exceptional_fibers)
        if not self.known:
            if any(f is not None for f in fields):
                raise ValueError("unknown Seifert data carries no fields")
            return
        if any(f is None for f in fields):
            raise ValueError("known Seifert data needs every field")
        if self.base not in ("o1", "n2"):
            raise ValueError(f"unknown base symbol {self.base!r}")
        for alpha, beta in self.exceptional_fibers:
            if alpha < 2 or not 0 < beta < alpha:
                raise ValueError(f"bad exceptional fiber {(alpha, beta)}")

    def __str__(self) -> str:
        if not self.known:
            return "n/a"
        parts = [str(self.euler_like), f"({self.base}, {self.genus})"]
        if self.exceptional_fibers:
            parts.append(", ".join(f"({a}, {b})" for a, b in self.exceptional_fibers))
        return "{" + "; ".join(parts) + "}"

    def to_json(self) -> dict:
        if not self.known:
            return {"known": False}
        return {
            "known": True,
            "euler": self.euler_like,
            "base": self.base,
            "genus": self.genus,
            "fibers": [list(f) for f in self.exceptional_fibers],
            "text": str(self),
        }


UNKNOWN = SeifertData(False)

_ELLIPTIC_SEIFERT = {
    "S": SeifertData(True, -2, "o1", 0, ((2, 1), (4, 3), (4, 3))),
    "E+": SeifertData(True, -2, "o1", 0, ((2, 1), (3, 2), (6, 5))),
    "E-": SeifertData(True, -1, "o1", 0, ((2, 1), (3, 1), (6, 1))),
    "-E+": SeifertData(True, -1, "o1", 0, ((3, 1), (3, 1), (3, 1))),
    "-E-": SeifertData(True, -2, "o1", 0, ((3, 2), (3, 2), (3, 2))),
    # no description recorded for -S
}

_MINUS_IDENTITY = SeifertData(True, -2, "o1", 0, ((2, 1),) * 4)


def seifert_lookup(c: ConjClass) -> SeifertData:
    """Tabulated Seifert invariants; hyperbolic classes (Solv) and -S are unknown."""
    if isinstance(c, Elliptic):
        return _ELLIPTIC_SEIFERT.get(c.rep, UNKNOWN)
    if isinstance(c, Shear):
        if c.sign > 0:
            return SeifertData(True, -c.n, "o1", 1, ())
        if c.n == 0:
            return _MINUS_IDENTITY
        return SeifertData(True, -c.n, "n2", 2, ())
    return UNKNOWN
