import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def letters(n, max_size=12, min_size=0):
    """Signed Artin letters for n strands."""
    return st.lists(
        st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))),
        min_size=min_size, max_size=max_size,
    ).map(tuple)


@st.composite
def pure_letters(draw, n, pieces=4):
    """A product of conjugated squares: always a pure braid."""
    out = []
    for _ in range(draw(st.integers(0, pieces))):
        conj = draw(letters(n, max_size=3))
        k = draw(st.integers(1, n - 1)) * draw(st.sampled_from((1, -1)))
        out += [-x for x in reversed(conj)] + [k, k] + list(conj)
    return tuple(out)


def free_letters(rank, max_size=8):
    return st.lists(
        st.integers(1, rank).flatmap(lambda k: st.sampled_from((k, -k))),
        max_size=max_size,
    ).map(tuple)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(f"criterion {number}: {RESULTS[number]}")
