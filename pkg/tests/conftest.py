import random
from fractions import Fraction as Q

import pytest

from parkplane.core import Arrangement, Hyperplane, Multigraph


def arrangement(n, *triples):
    return Arrangement(n, tuple(Hyperplane(p, q, Q(a)) for p, q, a in triples))


# Oriented 3-cycle 1 -> 2 -> 3 -> 1 and its arrangement with constants 1/2.
CYCLE = Multigraph.from_edges(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)])
CYCLE_ARR = arrangement(3, (1, 2, "1/2"), (2, 3, "1/2"), (3, 1, "1/2"))

# Undirected path 1 - 2 - 3 as a multigraph: one edge each way on 12 and 23.
PATH = Multigraph.from_edges(3, [(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1)])

# Edges 1->2, 2->3, 3->2, 3->1 with two geometries.  In the first, the lines
# x1-x2=1/2 and x3-x1=1/2 meet on x3-x2=1 (9 regions); in the second the
# meeting point lies strictly between the two parallel lines (10 regions,
# label 101 on two of them).
TWO_WAY = Multigraph.from_edges(3, [(1, 2, 1), (2, 3, 1), (3, 2, 1), (3, 1, 1)])
TWO_WAY_CONCURRENT = arrangement(3, (1, 2, "1/2"), (2, 3, "1/2"), (3, 2, "1"), (3, 1, "1/2"))
TWO_WAY_OPEN = arrangement(3, (1, 2, "1/2"), (2, 3, "1/2"), (3, 2, "3/2"), (3, 1, "1/2"))


def labels(strings):
    return {tuple(int(c) for c in s) for s in strings}


def random_multigraph(rng, n_max=5, mult_max=2):
    """Random oriented multigraph; each ordered pair gets 0, 1, 2 edges with weights 5:3:2."""
    n = rng.randint(2, n_max)
    values = list(range(mult_max + 1))
    weights = [5, 3, 2, 1, 1, 1][: mult_max + 1]
    rows = tuple(
        tuple(0 if i == j else rng.choices(values, weights)[0] for j in range(n))
        for i in range(n)
    )
    return Multigraph(n, rows)


def random_arrangement(rng, n_max=4, size_max=8):
    """Random arrangement with small constants, so parallel and concurrent hyperplanes are common."""
    n = rng.randint(2, n_max)
    size = rng.randint(0, size_max)
    chosen = []
    for _ in range(size * 4):
        if len(chosen) == size:
            break
        p, q = rng.sample(range(1, n + 1), 2)
        h = Hyperplane(p, q, Q(rng.randint(1, 6), rng.choice([1, 2, 3])))
        if h not in chosen:
            chosen.append(h)
    return Arrangement(n, tuple(chosen))


@pytest.fixture
def rng():
    return random.Random(1729)


# Acceptance reporting: one PASS/FAIL line per criterion at the end of the run.

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    previous = _criteria.get(number, (title, True))[1]
    _criteria[number] = (title, previous and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
