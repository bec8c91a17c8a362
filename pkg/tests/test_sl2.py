import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import sl2_elements
from oracles import binary_necklaces, find_conjugator, rl_necklace_words, rl_word_matrix, short_words
from torusskein import sampling
from torusskein.errors import DomainError, ParseError
from torusskein.sl2 import (E_MINUS, E_PLUS, ELLIPTIC_REPS, I2, CyclicRLWord, Elliptic,
                            Hyperbolic, L, Mat2, R, S, Shear, T, canonical_words,
                            class_to_matrix, classify, conjugate_in_sl2, enumerate_classes,
                            equivalent_unoriented, least_rotation, negate_class,
                            parse_element, parse_label, parse_word, shear_exponent,
                            word_to_matrix)


@pytest.fixture(scope="module")
def words12():
    return short_words(12)


def elem(text):
    return parse_element(text)


# --- matrices and words -------------------------------------------------------

def test_mat2_rejects_bad_determinant():
    with pytest.raises(DomainError):
        Mat2(2, 0, 0, 1)
    with pytest.raises(DomainError):
        Mat2.gl2(2, 0, 0, 1)
    j = Mat2.gl2(1, 0, 0, -1)
    assert j.det == -1
    assert j @ j == I2


def test_generators():
    assert S.to_rows() == [[0, -1], [1, 0]]
    assert T.to_rows() == [[1, 1], [0, 1]]
    assert R == T and L == T.transpose()


def test_presentation_relations():
    assert elem("S^4") == I2
    # with these matrices (ST)^3 is the central element S^2 = -I
    assert elem("(S T)^3") == S ** 2 == -I2
    assert elem("(S T)^6") == I2


def test_rl_product():
    assert elem("R L") == Mat2(2, 1, 1, 1)


@pytest.mark.parametrize("text, expected", [
    ("R^2 L^3", Mat2(7, 2, 3, 1)),
    ("S T^-1", S @ T.inverse()),
    ("RL", Mat2(2, 1, 1, 1)),
    ("-S", -S),
    ("(R L)^-1", Mat2(2, 1, 1, 1).inverse()),
    ("T^2 T^-2", I2),
    ("E+ E-", E_PLUS @ E_MINUS),
    ("[[1,1],[0,1]]", T),
    ("-[[1,0],[0,1]]", -I2),
    (" [ [ 0 , -1 ] , [ 1 , 0 ] ] ", S),
])
def test_parse_element(text, expected):
    assert elem(text) == expected


@pytest.mark.parametrize("bad", ["X", "R^", "(R L", "R L)", "^2", "", "[[1,2],[3]]", "R^2^3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        elem(bad)


def test_word_normalization():
    _, w = parse_word("R R^2 L L^-1 S")
    assert w.letters == (("R", 3), ("S", 1))
    assert word_to_matrix(w) == R ** 3 @ S


@given(st.lists(st.integers(1, 6), min_size=2, max_size=8).filter(lambda e: len(e) % 2 == 0))
def test_rl_matrix_matches_independent_product(exps):
    assert sampling.rl_matrix(exps).to_rows() == rl_word_matrix(exps)


# --- cyclic words ---------------------------------------------------------------

@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_booth_matches_brute_force(seq):
    k = least_rotation(seq)
    assert seq[k:] + seq[:k] == min(seq[i:] + seq[:i] for i in range(len(seq)))


def test_cyclic_word_validation():
    assert CyclicRLWord.canonical((3, 1, 1, 2)).exponents == (1, 2, 3, 1)
    with pytest.raises(ValueError):
        CyclicRLWord((3, 1, 1, 2))
    with pytest.raises(ValueError):
        CyclicRLWord((1, 0))
    with pytest.raises(ValueError):
        CyclicRLWord((1,))


@pytest.mark.parametrize("m", range(2, 10))
def test_word_count_matches_necklaces(m):
    words = canonical_words(m)
    assert len(words) == binary_necklaces(m) - 2
    assert len(words) == len(rl_necklace_words(m))


# --- classification examples ------------------------------------------------------

@pytest.mark.parametrize("g, cls", [
    (Mat2(1, 1, 0, 1), Shear(1, 1)),
    (Mat2(1, 0, 1, 1), Shear(1, -1)),
    (Mat2(2, 1, 1, 1), Hyperbolic(1, CyclicRLWord((1, 1)))),
    (Mat2(0, -1, 1, 0), Elliptic("S")),
    (Mat2(-1, 0, 0, -1), Shear(-1, 0)),
    (I2, Shear(1, 0)),
])
def test_classify_examples(g, cls):
    assert classify(g) == cls


def test_left_shear_conjugator():
    assert L.conj(S) == T.inverse()


@pytest.mark.parametrize("cls, rows", [
    (Shear(1, 3), [[1, 3], [0, 1]]),
    (Hyperbolic(1, CyclicRLWord((2, 3))), rl_word_matrix((2, 3))),
    (Elliptic("-E-"), [[0, -1], [1, -1]]),
])
def test_class_to_matrix_examples(cls, rows):
    assert class_to_matrix(cls).to_rows() == rows


def test_elliptic_orders():
    for name, rep in ELLIPTIC_REPS.items():
        order = {"S": 4, "-S": 4, "E+": 6, "E-": 6, "-E+": 3, "-E-": 3}[name]
        assert rep ** order == I2
        assert all(rep ** k != I2 for k in range(1, order))


def test_elliptic_closure_table():
    """Close each representative under conjugation by S, T^+-1 (entries bounded)
    and check every reached matrix classifies back to its representative, with
    the six orbits pairwise disjoint."""
    conj = (S, T, T.inverse())
    owner = {}
    for name, rep in ELLIPTIC_REPS.items():
        frontier = {rep}
        seen = {rep}
        while frontier:
            nxt = set()
            for g in frontier:
                for h in conj:
                    x = g.conj(h)
                    if max(abs(x.a), abs(x.b), abs(x.c), abs(x.d)) <= 20 and x not in seen:
                        seen.add(x)
                        nxt.add(x)
            frontier = nxt
        for x in seen:
            assert owner.setdefault(x, name) == name
            assert classify(x) == Elliptic(name)
    assert all(sum(1 for v in owner.values() if v == n) > 10 for n in ELLIPTIC_REPS)


def test_classify_rejects_gl2():
    with pytest.raises(DomainError):
        classify(Mat2.gl2(0, 1, 1, 0))


def test_shear_exponent_closed_form():
    for n in range(-7, 8):
        for h in (I2, S, T, L ** 3, Mat2(2, 1, 1, 1), Mat2(5, 3, 3, 2)):
            assert shear_exponent((T ** n).conj(h)) == n


# --- properties ----------------------------------------------------------------------

CLASSES = enumerate_classes(6, 7)


@given(st.sampled_from(CLASSES), sl2_elements())
def test_conjugation_invariance(c, h):
    assert classify(class_to_matrix(c).conj(h)) == c


@given(st.sampled_from(CLASSES))
def test_round_trip(c):
    assert classify(class_to_matrix(c)) == c
    assert parse_label(c.label) == c


@given(sl2_elements(16))
def test_sign_coherence(g):
    assert classify(-g) == negate_class(classify(g))


@given(sl2_elements(16))
def test_trace_dispatch(g):
    c = classify(g)
    t = abs(g.trace)
    assert isinstance(c, Elliptic) == (t < 2)
    assert isinstance(c, Shear) == (t == 2)
    assert isinstance(c, Hyperbolic) == (t > 2)


@given(st.lists(st.integers(1, 5), min_size=2, max_size=8).filter(lambda e: len(e) % 2 == 0),
       st.integers(0, 10), st.booleans())
def test_cyclic_rotation_invariance(exps, r, neg):
    g = sampling.rl_matrix(exps)
    h = sampling.rl_matrix(sampling.rotate_pairs(exps, r))
    if neg:
        g, h = -g, -h
    assert classify(g) == classify(h)
    assert classify(g).word == CyclicRLWord.canonical(exps)


@given(st.integers(-30, 30).filter(lambda n: n), sl2_elements())
def test_shear_extraction_property(n, h):
    assert classify((T ** n).conj(h)) == Shear(1, n)


def test_large_word_classifies():
    exps = (40, 1, 3, 77, 2, 2, 9, 1)
    g = sampling.rl_matrix(exps).conj(Mat2(13, 8, 8, 5) @ S)
    assert classify(g) == Hyperbolic(1, CyclicRLWord.canonical(exps))
    assert classify(sampling.rl_matrix((1, 1) * 6)).word.exponents == (1, 1) * 6


# --- conjugacy and equivalence ----------------------------------------------------------

def test_conjugate_in_sl2_examples(words12):
    assert conjugate_in_sl2(T, T.conj(S))
    assert not conjugate_in_sl2(S, -S)
    assert find_conjugator(words12, S.to_rows(), (-S).to_rows()) is None
    rl, lr = R @ L, L @ R
    assert conjugate_in_sl2(rl, lr)
    assert find_conjugator(words12, rl.to_rows(), lr.to_rows()) is not None


def test_equivalent_unoriented_examples():
    j = Mat2.gl2(1, 0, 0, -1)
    assert S.conj(j) == -S
    assert T.conj(j) == T.inverse()
    assert equivalent_unoriented(S, -S)
    assert equivalent_unoriented(T, T.inverse())
    assert not conjugate_in_sl2(T, T.inverse())
    assert not equivalent_unoriented(R @ L, R ** 2 @ L ** 2)


def test_brute_force_agrees_with_labels(words12):
    rng = random.Random(11)
    small = enumerate_classes(3, 4)
    for _ in range(40):
        c1 = rng.choice(small)
        c2 = c1 if rng.random() < 0.5 else rng.choice(small)
        g = class_to_matrix(c1)
        h = class_to_matrix(c2).conj(sampling.random_sl2(rng, 4))
        found = find_conjugator(words12, g.to_rows(), h.to_rows())
        if found is not None:
            assert classify(g) == classify(h)
        if classify(g) != classify(h):
            assert found is None


# --- enumeration -----------------------------------------------------------------------

def test_enumerate_degenerate():
    got = enumerate_classes(0, 0)
    assert len(got) == 8
    assert {c.label for c in got} == {"S", "-S", "E+", "-E+", "E-", "-E-", "T^0", "-T^0"}


def test_enumerate_small():
    got = {c.label for c in enumerate_classes(2, 2)}
    extra = got - {c.label for c in enumerate_classes(0, 0)}
    assert extra == {"T^1", "T^-1", "T^2", "T^-2", "-T^1", "-T^-1", "-T^2", "-T^-2",
                     "+R^1L^1", "-R^1L^1"}


def test_enumerate_no_duplicates_and_distinct_classes():
    classes = enumerate_classes(10, 8)
    assert len(classes) == len(set(classes))
    # canonical words are distinct conjugacy invariants
    assert len({classify(class_to_matrix(c)) for c in classes}) == len(classes)


def test_enumerate_rejects_negative():
    with pytest.raises(DomainError):
        enumerate_classes(-1, 0)


def test_labels():
    assert Shear(1, 5).label == "T^5"
    assert Shear(-1, 0).label == "-T^0"
    assert Hyperbolic(1, CyclicRLWord((2, 3))).label == "+R^2L^3"
    assert Hyperbolic(1, CyclicRLWord.canonical((2, 3, 1, 1))).label == "+R^1L^1R^2L^3"
    assert parse_label("-E+") == Elliptic("-E+")
    with pytest.raises(ParseError):
        parse_label("+R^3L^1R^1L^1")   # not canonical
