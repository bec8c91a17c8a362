"""SL2(Z) elements, words in S/T/R/L, and conjugacy-class normal forms.

Classes are stratified by trace:

* |tr| < 2, g != +-I: six elliptic classes +-S, +-E+, +-E-;
* tr = +-2: shears +-T^n, n in Z (n = 0 gives +-I);
* |tr| > 2: +- a positive word R^j1 L^k1 ... R^jI L^kI up to cyclic rotation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, isqrt
from typing import Iterator, Sequence, Union

from .errors import ConsistencyError, DomainError, ParseError
from .zmatrix import ZMatrix


@dataclass(frozen=True)
class Mat2:
    """A 2x2 integer matrix with determinant 1.

    ``Mat2.gl2`` builds values with determinant -1 as well; they are only
    used as conjugators.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant {self.det} != 1 for {self}")

    @classmethod
    def gl2(cls, a: int, b: int, c: int, d: int) -> "Mat2":
        det = a * d - b * c
        if det not in (1, -1):
            raise DomainError(f"determinant {det} is not +-1")
        obj = object.__new__(cls)
        for name, val in zip("abcd", (a, b, c, d)):
            object.__setattr__(obj, name, val)
        return obj

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_zmatrix(cls, m: ZMatrix) -> "Mat2":
        if m.shape != (2, 2):
            raise DomainError(f"expected a 2x2 matrix, got {m.shape}")
        return cls(*m.entries)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2.gl2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __neg__(self) -> "Mat2":
        return Mat2.gl2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        s = self.det
        return Mat2.gl2(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        out = Mat2.identity()
        n = abs(n)
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def conj(self, h: "Mat2") -> "Mat2":
        """h @ self @ h^-1"""
        return h @ self @ h.inverse()

    def transpose(self) -> "Mat2":
        return Mat2.gl2(self.a, self.c, self.b, self.d)

    def to_zmatrix(self) -> ZMatrix:
        return ZMatrix(2, 2, (self.a, self.b, self.c, self.d))

    def to_rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def to_json(self) -> list[list[str]]:
        return self.to_zmatrix().to_json()

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


I2 = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
R = T
L = Mat2(1, 0, 1, 1)
E_PLUS = Mat2(1, -1, 1, 0)
E_MINUS = Mat2(0, 1, -1, 1)
J = Mat2.gl2(1, 0, 0, -1)

GENERATORS = {"S": S, "T": T, "R": R, "L": L, "I": I2, "E+": E_PLUS, "E-": E_MINUS}


# ---------------------------------------------------------------------------
# words

@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for gen, exp in self.letters:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent in a normalized word")
        if any(x[0] == y[0] for x, y in zip(self.letters, self.letters[1:])):
            raise ValueError("adjacent letters must differ")

    @classmethod
    def normalized(cls, letters: Sequence[tuple[str, int]]) -> "GroupWord":
        out: list[list] = []
        for gen, exp in letters:
            if gen == "I" or exp == 0:
                continue
            if out and out[-1][0] == gen:
                out[-1][1] += exp
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([gen, exp])
        return cls(tuple((g, e) for g, e in out))

    def __str__(self) -> str:
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters) or "I"


def word_to_matrix(w: GroupWord) -> Mat2:
    out = I2
    for gen, exp in w.letters:
        out = out @ GENERATORS[gen] ** exp
    return out


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(E[+-]|[STRLI])|(\^\s*[+-]?\d+))")


def parse_word(text: str) -> tuple[int, GroupWord]:
    """Parse ``R^2 L^3``, ``S T^-1``, ``(S T)^3`` etc.

    Returns (sign, word); a leading ``-`` negates the product.
    """
    s = text.strip()
    sign = 1
    if s[:1] in "+-" and s[:1]:
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    pos = 0
    stack: list[list[tuple[str, int]]] = [[]]
    last: list[tuple[str, int]] | None = None   # what a following ^k applies to
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"unexpected input at {s[pos:]!r} in {text!r}")
        pos = m.end()
        lpar, rpar, gen, exp = m.groups()
        if lpar:
            stack.append([])
            last = None
        elif rpar:
            if len(stack) == 1:
                raise ParseError(f"unbalanced ')' in {text!r}")
            group = stack.pop()
            stack[-1].append(("(", group))  # type: ignore[arg-type]
            last = stack[-1]
        elif gen:
            stack[-1].append((gen, 1))
            last = stack[-1]
        else:
            if last is None or not last:
                raise ParseError(f"exponent with nothing to apply to in {text!r}")
            k = int(exp[1:].strip())
            g, e = last[-1]
            if g == "(":
                last[-1] = ("(", e, k)  # type: ignore[assignment]
            else:
                if e != 1:
                    raise ParseError(f"double exponent in {text!r}")
                last[-1] = (g, k)
            last = None
    if len(stack) != 1:
        raise ParseError(f"unbalanced '(' in {text!r}")
    if not stack[0]:
        raise ParseError(f"empty word {text!r}")
    return sign, GroupWord.normalized(_flatten(stack[0]))


def _flatten(items) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for item in items:
        if item[0] != "(":
            out.append(item)
            continue
        inner = _flatten(item[1])
        k = item[2] if len(item) == 3 else 1
        if k < 0:
            inner = [(g, -e) for g, e in reversed(inner)]
        out.extend(inner * abs(k))
    return out


_MATRIX = re.compile(r"^\s*([+-]?)\s*\[\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*,"
                     r"\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*\]\s*$")


def parse_matrix(text: str) -> Mat2:
    """Parse ``[[a,b],[c,d]]`` with an optional leading sign."""
    m = _MATRIX.match(text)
    if not m:
        raise ParseError(f"not a 2x2 matrix literal: {text!r}")
    sign = -1 if m.group(1) == "-" else 1
    a, b, c, d = (sign * int(x) for x in m.groups()[1:])
    return Mat2(a, b, c, d)


def parse_element(text: str) -> Mat2:
    """Matrix literal or word; raises ParseError or DomainError (det != 1)."""
    if "[" in text:
        return parse_matrix(text)
    sign, w = parse_word(text)
    g = word_to_matrix(w)
    return -g if sign < 0 else g


# ---------------------------------------------------------------------------
# cyclic R/L words

def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:  # i == -1
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


@dataclass(frozen=True)
class CyclicRLWord:
    """Exponents (j1, k1, ..., jI, kI) of R^j1 L^k1 ... up to even rotation."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        e = self.exponents
        if len(e) < 2 or len(e) % 2:
            raise ValueError(f"need a nonempty even-length exponent list, got {e}")
        if any(x < 1 for x in e):
            raise ValueError(f"exponents must be positive, got {e}")
        if e != _canonical_rotation(e):
            raise ValueError(f"{e} is not in canonical rotation")

    @classmethod
    def canonical(cls, exponents: Sequence[int]) -> "CyclicRLWord":
        return cls(_canonical_rotation(tuple(exponents)))

    @property
    def letter_count(self) -> int:
        return sum(self.exponents)

    def pairs(self) -> list[tuple[int, int]]:
        e = self.exponents
        return list(zip(e[::2], e[1::2]))

    def matrix(self) -> Mat2:
        out = I2
        for j, k in self.pairs():
            out = out @ R ** j @ L ** k
        return out

    def __str__(self) -> str:
        return "".join(f"R^{j}L^{k}" for j, k in self.pairs())


def _canonical_rotation(e: tuple[int, ...]) -> tuple[int, ...]:
    if len(e) % 2:
        return e
    pairs = list(zip(e[::2], e[1::2]))
    k = least_rotation(pairs)
    pairs = pairs[k:] + pairs[:k]
    return tuple(x for p in pairs for x in p)


# ---------------------------------------------------------------------------
# class labels

ELLIPTIC_REPS = {
    "S": S, "-S": -S,
    "E+": E_PLUS, "-E+": -E_PLUS,
    "E-": E_MINUS, "-E-": -E_MINUS,
}


@dataclass(frozen=True)
class Elliptic:
    rep: str

    def __post_init__(self):
        if self.rep not in ELLIPTIC_REPS:
            raise ValueError(f"unknown elliptic representative {self.rep!r}")

    @property
    def label(self) -> str:
        return self.rep


@dataclass(frozen=True)
class Shear:
    """sign * T^n; Shear(1, 0) is I and Shear(-1, 0) is -I."""

    sign: int
    n: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")

    @property
    def label(self) -> str:
        return f"{'-' if self.sign < 0 else ''}T^{self.n}"


@dataclass(frozen=True)
class Hyperbolic:
    sign: int
    word: CyclicRLWord

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")

    @property
    def label(self) -> str:
        return f"{'-' if self.sign < 0 else '+'}{self.word}"


ConjClass = Union[Elliptic, Shear, Hyperbolic]

_SHEAR_LABEL = re.compile(r"^(-?)T\^(-?\d+)$")
_HYP_LABEL = re.compile(r"^([+-])((?:R\^\d+L\^\d+)+)$")


def parse_label(text: str) -> ConjClass:
    s = text.strip()
    if s in ELLIPTIC_REPS:
        return Elliptic(s)
    m = _SHEAR_LABEL.match(s)
    if m:
        return Shear(-1 if m.group(1) else 1, int(m.group(2)))
    m = _HYP_LABEL.match(s)
    if m:
        exps = tuple(int(x) for x in re.findall(r"\d+", m.group(2)))
        try:
            return Hyperbolic(-1 if m.group(1) == "-" else 1, CyclicRLWord(exps))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"not a class label: {text!r}")


def negate_class(c: ConjClass) -> ConjClass:
    if isinstance(c, Elliptic):
        return Elliptic(c.rep[1:] if c.rep.startswith("-") else "-" + c.rep)
    if isinstance(c, Shear):
        return Shear(-c.sign, c.n)
    return Hyperbolic(-c.sign, c.word)


def class_to_matrix(c: ConjClass) -> Mat2:
    if isinstance(c, Elliptic):
        return ELLIPTIC_REPS[c.rep]
    if isinstance(c, Shear):
        g = T ** c.n
        return g if c.sign > 0 else -g
    g = c.word.matrix()
    return g if c.sign > 0 else -g


# ---------------------------------------------------------------------------
# classification

def _check_sl2(g: Mat2):
    if g.det != 1:
        raise DomainError(f"determinant {g.det} != 1 for {g}")


def shear_exponent(g: Mat2) -> int:
    """n with g conjugate to T^n, for g of trace 2.

    g - I is nilpotent of rank <= 1, so it equals n * v * w(v, .) with v a
    primitive vector spanning its image and w(v, x) = v1 x2 - v2 x1.
    """
    if g.trace != 2:
        raise DomainError(f"trace {g.trace} != 2")
    nb, nc = g.b, g.c
    na, nd = g.a - 1, g.d - 1
    col = (na, nc) if (na, nc) != (0, 0) else (nb, nd)
    if col == (0, 0):
        return 0
    k = gcd(*col)
    v1, v2 = col[0] // k, col[1] // k
    # n * [[-v1 v2, v1^2], [-v2^2, v1 v2]]
    n = nb // (v1 * v1) if v1 else -nc // (v2 * v2)
    if (n * -v1 * v2, n * v1 * v1, n * -v2 * v2, n * v1 * v2) != (na, nb, nc, nd):
        raise ConsistencyError(f"{g} - I is not a rank-one nilpotent")
    return n


def _elliptic_reduce(g: Mat2) -> Mat2:
    """Gauss-reduce the definite form c x^2 + (d - a) x y - b y^2 attached to g.

    Conjugating g moves its fixed point in the upper half plane; the reduced
    matrix is a canonical representative of the SL2(Z) class.
    """
    s = 1 if g.c > 0 else -1
    for _ in range(10_000):
        a_, b_, c_ = s * g.c, s * (g.d - g.a), -s * g.b   # positive definite (A, B, C)
        if b_ > a_ or b_ <= -a_:
            # B -> B - 2 A k lands in (-A, A]
            k = -((a_ - b_) // (2 * a_))
            g = g.conj(T ** k)
            continue
        if a_ > c_:
            g = g.conj(S)
            continue
        if a_ == c_ and b_ < 0:
            g = g.conj(S)
            continue
        return g
    raise ConsistencyError(f"elliptic reduction did not terminate for {g}")


@lru_cache(maxsize=None)
def _elliptic_table() -> dict[Mat2, str]:
    table = {}
    for name, rep in ELLIPTIC_REPS.items():
        red = _elliptic_reduce(rep)
        if red in table:
            raise ConsistencyError(f"{name} and {table[red]} reduce to the same matrix")
        table[red] = name
    return table


def _quadratic_floor(p: int, q: int, dd: int) -> int:
    """floor((p + sqrt(dd)) / q) for non-square dd > 0."""
    r = isqrt(dd)
    if q > 0:
        return (p + r) // q
    return -((p + r) // -q) - 1


def _hyperbolic_word(g: Mat2) -> tuple[int, ...]:
    """Exponent sequence of a positive R/L word conjugate to g (trace > 2).

    The attracting fixed point x of g has a continued fraction
    [a0; a1, a2, ...] whose Stern-Brocot path R^a0 L^a1 R^a2 ... is
    eventually periodic. Conjugating by the pre-period moves g onto a power
    of the period word; that equality is checked exactly.
    """
    t = g.trace
    disc = t * t - 4
    # x = (a - d + sqrt(disc)) / (2c), tracked as (P + sqrt(disc)) / Q with Q | disc - P^2
    p, q = g.a - g.d, 2 * g.c
    cf: list[int] = []
    seen: dict[tuple[int, int, int], int] = {}
    while (p, q, len(cf) % 2) not in seen:
        seen[p, q, len(cf) % 2] = len(cf)
        a = _quadratic_floor(p, q, disc)
        cf.append(a)
        p = a * q - p
        q = (disc - p * p) // q
    first = seen[p, q, len(cf) % 2]
    period = cf[first:]
    start = first
    if start % 2:
        # keep R-first alignment
        start += 1
        period = period[1:] + period[:1]

    prefix = I2
    for i, a in enumerate(cf[:start]):
        prefix = prefix @ (R if i % 2 == 0 else L) ** a
    reduced = g.conj(prefix.inverse())
    w = _word_matrix(period)
    power, k = w, 1
    while power.trace < reduced.trace:
        power, k = power @ w, k + 1
    if power != reduced:
        raise ConsistencyError(f"no positive word found for {g}")
    return tuple(period) * k


def _word_matrix(exps: Sequence[int]) -> Mat2:
    out = I2
    for i, e in enumerate(exps):
        out = out @ (R if i % 2 == 0 else L) ** e
    return out


def classify(g: Mat2) -> ConjClass:
    """Canonical conjugacy-class label of g in SL2(Z)."""
    _check_sl2(g)
    t = g.trace
    if abs(t) < 2:
        return Elliptic(_elliptic_table()[_elliptic_reduce(g)])
    sign = 1 if t > 0 else -1
    h = g if sign > 0 else -g
    if abs(t) == 2:
        return Shear(sign, shear_exponent(h))
    return Hyperbolic(sign, CyclicRLWord.canonical(_hyperbolic_word(h)))


def conjugate_in_sl2(g: Mat2, h: Mat2) -> bool:
    return classify(g) == classify(h)


def equivalent_unoriented(g: Mat2, h: Mat2) -> bool:
    """True iff g is GL2(Z)-conjugate to h or h^-1."""
    c = classify(g)
    hi = h.inverse()
    return any(classify(x) == c for x in (h, hi, h.conj(J), hi.conj(J)))


# ---------------------------------------------------------------------------
# enumeration

def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive ints summing to total."""
    for cuts in product((False, True), repeat=total - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def canonical_words(letter_count: int) -> list[CyclicRLWord]:
    """Canonical cyclic words with exactly ``letter_count`` letters, sorted."""
    out = []
    for comp in _compositions(letter_count) if letter_count >= 2 else ():
        if len(comp) % 2 == 0 and _canonical_rotation(comp) == comp:
            out.append(CyclicRLWord(comp))
    return sorted(out, key=lambda w: w.exponents)


def enumerate_classes(trace_bound: int, word_length_bound: int) -> list[ConjClass]:
    """Elliptic classes, shears +-T^n with |n| <= trace_bound, and hyperbolic
    classes whose R/L word has at most ``word_length_bound`` letters."""
    if trace_bound < 0 or word_length_bound < 0:
        raise DomainError("bounds must be nonnegative")
    out: list[ConjClass] = [Elliptic(r) for r in ELLIPTIC_REPS]
    for n in range(-trace_bound, trace_bound + 1):
        out += [Shear(1, n), Shear(-1, n)]
    for m in range(2, word_length_bound + 1):
        for w in canonical_words(m):
            out += [Hyperbolic(1, w), Hyperbolic(-1, w)]
    return out
