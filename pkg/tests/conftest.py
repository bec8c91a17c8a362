import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from torusskein.sl2 import I2, L, S, T  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []

_LETTERS = (S, T, T.inverse(), L, L.inverse())


@st.composite
def sl2_elements(draw, max_len=12):
    g = I2
    for i in draw(st.lists(st.integers(0, len(_LETTERS) - 1), max_size=max_len)):
        g = g @ _LETTERS[i]
    if draw(st.booleans()):
        g = -g
    return g


def int_matrices(min_size=1, max_size=5, bound=50):
    return st.integers(min_size, max_size).flatmap(
        lambda r: st.integers(min_size, max_size).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
