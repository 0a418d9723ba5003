import pytest
from hypothesis import strategies as st

from respoly.gallery import load
from respoly.zseries import LinRep, UnaryQP


@pytest.fixture
def badexok():
    return load("badexok").series


@pytest.fixture
def badexko():
    return load("badexko").series


@pytest.fixture
def parity():
    return load("parity").series


@pytest.fixture
def identity():
    return load("identity").series


@pytest.fixture
def choose2():
    return load("choose2").series


def length_rep(alphabet="a"):
    """w -> |w| as a 2-dimensional linear representation."""
    return LinRep(alphabet, [1, 0], {a: [[1, 1], [0, 1]] for a in alphabet}, [0, 1])


@st.composite
def unary_qps(draw, max_period=3, max_degree=2, max_threshold=4, bound=6):
    """Quasi-polynomials fitted through random integer samples (hence integer-valued)."""
    period = draw(st.integers(1, max_period))
    deg = draw(st.integers(-1, max_degree))
    threshold = draw(st.integers(0, max_threshold))
    prefix = draw(st.lists(st.integers(-bound, bound), min_size=threshold, max_size=threshold))
    if deg < 0:
        tail = [0] * period
    else:
        tail = draw(st.lists(st.integers(-bound, bound), min_size=period * (deg + 1), max_size=period * (deg + 1)))
    return UnaryQP.from_values(prefix + tail, threshold, period)


@st.composite
def linreps(draw, alphabet="ab", max_dim=3, bound=2):
    d = draw(st.integers(1, max_dim))
    entry = st.integers(-bound, bound)
    vec = st.lists(entry, min_size=d, max_size=d)
    mat = st.lists(vec, min_size=d, max_size=d)
    return LinRep(alphabet, draw(vec), {a: draw(mat) for a in alphabet}, draw(vec))


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for row in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.report_line(*row))
