from __future__ import annotations

import itertools

import pytest
from hypothesis import reject, strategies as st

from quadset.core import build_from_left_action, build_set, invert, trivial_set
from quadset.errors import NotABijection

E4_LEFT = [(0, 1, 3, 2), (0, 1, 3, 2), (1, 0, 2, 3), (1, 0, 2, 3)]
# three relations 10=01, 21=02, 20=12; braided
B3_LEFT = [(0, 1, 2), (0, 1, 2), (1, 0, 2)]
# quantum binomial with lri, not braided
NB4_LEFT = [(0, 1, 2, 3), (0, 1, 2, 3), (0, 3, 2, 1), (1, 0, 2, 3)]
# quantum binomial without lri
NOLRI4_TABLE = [
    (0, 0), (1, 0), (2, 1), (3, 1),
    (0, 1), (1, 1), (3, 0), (2, 0),
    (1, 3), (0, 2), (2, 2), (3, 2),
    (1, 2), (0, 3), (2, 3), (3, 3),
]
# involutive but L_1 = (1, 2, 1) is not a permutation
DEGENERATE3_TABLE = [
    (0, 0), (0, 1), (0, 2),
    (1, 0), (2, 0), (1, 2),
    (1, 1), (2, 1), (2, 2),
]


@pytest.fixture
def e4():
    return build_from_left_action(4, E4_LEFT)


@pytest.fixture
def t4():
    return trivial_set(4)


@pytest.fixture
def t3():
    return trivial_set(3)


@pytest.fixture
def b3():
    return build_from_left_action(3, B3_LEFT)


@pytest.fixture
def nb4():
    return build_from_left_action(4, NB4_LEFT)


@pytest.fixture
def nolri4():
    return build_set(4, NOLRI4_TABLE)


@pytest.fixture
def degenerate3():
    return build_set(3, DEGENERATE3_TABLE)


@st.composite
def quadratic_sets(draw, max_n: int = 3):
    """Arbitrary bijections of X x X."""
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.product(range(n), repeat=2))
    return build_set(n, draw(st.permutations(pairs)))


@st.composite
def lri_sets(draw, max_n: int = 4, square_free: bool = True):
    """Sets built from random left actions; rejected draws are skipped."""
    n = draw(st.integers(1, max_n))
    rows = []
    for x in range(n):
        perm = list(draw(st.permutations(range(n))))
        if square_free:
            i = perm.index(x)
            perm[i], perm[x] = perm[x], perm[i]
        rows.append(tuple(perm))
    try:
        return build_from_left_action(n, rows)
    except NotABijection:
        reject()


@st.composite
def involutive_sets(draw, max_n: int = 4):
    """r(x, y) = (L_x(y), L_u^-1(x)) with u = L_x(y); involutive for any L."""
    n = draw(st.integers(1, max_n))
    rows = [tuple(draw(st.permutations(range(n)))) for _ in range(n)]
    inv = [invert(p) for p in rows]
    return build_set(n, [(rows[x][y], inv[rows[x][y]][x]) for x in range(n) for y in range(n)])


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
